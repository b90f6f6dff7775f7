#pragma once

#include <muharm/rational.hpp>

#include <cstdint>
#include <random>

namespace muharm {

/// Seeded PRNG used by all samplers and verifiers: std::mt19937_64 with
/// explicit modulo reduction. The raw mt19937_64 stream is fully specified by
/// the C++ standard, and we avoid std distributions (whose output is
/// implementation-defined), so identical seeds give identical samples on every
/// platform and standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi], both inclusive. Modulo reduction; the
    /// bias is irrelevant here, determinism is what matters.
    long uniform(long lo, long hi) {
        if (hi <= lo) return lo;
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    bool coin() { return (gen_() & 1u) != 0; }

    /// Small nonzero rational with |num| <= max_num, 1 <= den <= max_den.
    Rational small_rational(long max_num = 4, long max_den = 3) {
        long num = uniform(1, max_num);
        if (coin()) num = -num;
        const long den = uniform(1, max_den);
        return Rational(num, den);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace muharm
