#pragma once

#include "muharm/betti_w.hpp"
#include "muharm/derham.hpp"
#include "muharm/group_algebra.hpp"
#include "muharm/laurent.hpp"
#include "muharm/rng.hpp"

namespace muharm {

/// Size knobs for random elements; defaults are desk scale, where tensor
/// expansion stays tractable.
struct SampleBudget {
    int max_words = 4;       // words per element
    int max_syllables = 3;   // syllable runs per word
    long max_exp = 3;        // |exponent| bound per run
    long laurent_span = 6;   // Laurent exponents from [-span/2, span/2]
    int laurent_terms = 3;
    int max_depth = 3;       // product-splitting depth in sample_FmW
};

ReducedWord random_word(SeededRng& rng, int max_syllables, long max_exp);
GroupAlgebraElement random_element(SeededRng& rng, const SampleBudget& b);
LaurentPoly random_laurent(SeededRng& rng, const SampleBudget& b);

/// kappa + v (X1 - 1): a random element of W.
GroupAlgebraElement random_w_element(SeededRng& rng, const SampleBudget& b);

/// Uniform-ish single z-word of the given total degree.
ZWord random_zword(SeededRng& rng, int n, long degree);

/// Random element of the m-th filtration step of W, built by the recursive
/// decomposition of the stratum: base Laurent stratum
/// (X0^N-1)^{m-1} P(X0) (X1-1) mixed with products from lower strata.
/// Guaranteed nonzero and in the stratum by construction.
GroupAlgebraElement sample_FmW(int n, int m, SeededRng& rng, const SampleBudget& b);

}  // namespace muharm
