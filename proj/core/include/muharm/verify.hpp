#pragma once

#include <string>
#include <vector>

#include "muharm/sampler.hpp"

namespace muharm {

struct CaseResult {
    std::string label;
    std::string element;   // input, printable in the external grammar
    std::string expected;  // may be empty when the check is a bound
    std::string actual;
    bool pass = false;
};

/// Outcome of one verifier run. Deterministic given (parameters, seed):
/// the wall-clock duration is carried separately and excluded from default
/// serialization so identical runs stay byte-identical.
struct VerificationReport {
    std::string id;
    int n = 0;
    int m = 0;
    int trunc = 0;
    int samples = 0;
    unsigned long long seed = 0;
    std::vector<CaseResult> cases;
    double duration_seconds = 0.0;

    bool passed() const;
    int pass_count() const;
    std::string to_text(bool with_timing = false) const;
};

/// Coproduct lands in the m-th filtration step of the tensor square, on
/// sampled stratum elements; truncation m+2.
VerificationReport verify_thm1(int n, int m, int samples, unsigned long long seed);

/// The leading tensor slice of the coproduct of a lifted z-generator equals
/// the lifted harmonic coproduct, for every group exponent; plus seeded
/// random degree-m z-words.
VerificationReport verify_thm2(int n, int m);

/// Coassociativity, counit laws and multiplicativity for both coproducts:
/// exhaustive small z-words on the graded side, sampled W elements on the
/// filtered side.
VerificationReport verify_axioms(int n, int samples, unsigned long long seed);

/// The two independent filtration-degree algorithms agree on random
/// elements and on stratum samples.
VerificationReport verify_oracles(int n, int samples, unsigned long long seed, int trunc);

}  // namespace muharm
