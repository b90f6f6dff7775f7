#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace muharm {

/// The two free generators of the rank-2 free group.
enum class Letter : std::uint8_t { X0 = 0, X1 = 1 };

struct Syllable {
    Letter letter;
    long exponent;  // nonzero in a reduced word
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced word of the free group on X0, X1, stored as syllable runs
/// (letter, exponent) with adjacent runs on distinct letters. The empty
/// sequence is the identity. Runs keep high powers like X0^(2N) at O(1) size.
class ReducedWord {
public:
    ReducedWord() = default;

    /// Free-group normal form of an arbitrary syllable sequence.
    static ReducedWord reduce(std::span<const Syllable> raw);

    /// X0^e or X1^e; e == 0 gives the identity.
    static ReducedWord power(Letter l, long e);

    bool is_identity() const { return syl_.empty(); }
    const std::vector<Syllable>& syllables() const { return syl_; }

    /// Number of single letters, i.e. the sum of |exponent| over runs.
    long letter_length() const;

    ReducedWord inverse() const;

    friend ReducedWord operator*(const ReducedWord& a, const ReducedWord& b);

    /// Splits off the maximal trailing run of letter l:
    /// returns (prefix, e) with *this == prefix * l^e and prefix not ending in l.
    std::pair<ReducedWord, long> split_trailing(Letter l) const;

    /// Sum of X0-exponents; the word maps to zeta^(x0_degree) under X0 -> zeta,
    /// X1 -> 1.
    long x0_degree() const;

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b);

private:
    std::vector<Syllable> syl_;

    void append_run(Letter l, long e);
};

}  // namespace muharm
