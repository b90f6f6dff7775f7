#include "muharm/sampler.hpp"

namespace muharm {

ReducedWord random_word(SeededRng& rng, int max_syllables, long max_exp) {
    long k = rng.uniform(0, max_syllables);
    std::vector<Syllable> sylls;
    for (long i = 0; i < k; ++i) {
        Letter l = rng.coin() ? Letter::X0 : Letter::X1;
        long e = rng.uniform(1, max_exp);
        if (rng.coin()) e = -e;
        sylls.push_back({l, e});
    }
    return ReducedWord::reduce(sylls);
}

GroupAlgebraElement random_element(SeededRng& rng, const SampleBudget& b) {
    GroupAlgebraElement v;
    long words = rng.uniform(1, b.max_words);
    for (long i = 0; i < words; ++i)
        v.add_term(random_word(rng, b.max_syllables, b.max_exp), rng.small_rational());
    return v;
}

LaurentPoly random_laurent(SeededRng& rng, const SampleBudget& b) {
    LaurentPoly p;
    long half = b.laurent_span / 2;
    long terms = rng.uniform(1, b.laurent_terms);
    for (long i = 0; i < terms; ++i)
        p.add_term(rng.uniform(-half, half), rng.small_rational());
    return p;
}

GroupAlgebraElement random_w_element(SeededRng& rng, const SampleBudget& b) {
    GroupAlgebraElement v = random_element(rng, b) * (x1_pow(1) - GroupAlgebraElement(1));
    if (rng.coin()) v += GroupAlgebraElement(rng.small_rational());
    return v;
}

ZWord random_zword(SeededRng& rng, int n, long degree) {
    ZWord w;
    long left = degree;
    while (left > 0) {
        long part = rng.uniform(1, left);
        w.push_back(ZLetter{part, static_cast<int>(rng.uniform(0, n - 1))});
        left -= part;
    }
    return w;
}

namespace {

GroupAlgebraElement laurent_stratum(int n, int m, SeededRng& rng, const SampleBudget& b) {
    GroupAlgebraElement xnm1 = x0_pow(n) - GroupAlgebraElement(1);
    return xnm1.pow(m - 1) * laurent_to_x0(random_laurent(rng, b)) *
           (x1_pow(1) - GroupAlgebraElement(1));
}

}  // namespace

GroupAlgebraElement sample_FmW(int n, int m, SeededRng& rng, const SampleBudget& b) {
    GroupAlgebraElement v;
    if (m <= 0) {
        v = random_w_element(rng, b);
    } else if (m == 1) {
        v = random_element(rng, b) * (x1_pow(1) - GroupAlgebraElement(1));
    } else if (b.max_depth <= 0 || !rng.coin()) {
        v = laurent_stratum(n, m, rng, b);
    } else {
        SampleBudget inner = b;
        inner.max_depth = b.max_depth - 1;
        inner.max_words = b.max_words > 1 ? b.max_words - 1 : 1;
        long k = rng.uniform(1, m - 1);
        v = sample_FmW(n, static_cast<int>(k), rng, inner) *
            sample_FmW(n, m - static_cast<int>(k), rng, inner);
    }
    if (v.is_zero()) {
        // deterministic nonzero fallback inside the stratum
        GroupAlgebraElement xnm1 = x0_pow(n) - GroupAlgebraElement(1);
        v = xnm1.pow(m > 0 ? m - 1 : 0) * (x1_pow(1) - GroupAlgebraElement(1));
    }
    return v;
}

}  // namespace muharm
