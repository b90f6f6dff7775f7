#include "muharm/verify.hpp"

#include <chrono>
#include <tuple>

#include "muharm/betti_w.hpp"
#include "muharm/cyclotomic.hpp"
#include "muharm/mu_bridge.hpp"
#include "muharm/text_io.hpp"

namespace muharm {

bool VerificationReport::passed() const {
    if (cases.empty()) return false;
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

int VerificationReport::pass_count() const {
    int k = 0;
    for (const auto& c : cases) k += c.pass ? 1 : 0;
    return k;
}

std::string VerificationReport::to_text(bool with_timing) const {
    std::string out = "report: " + id + " N=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " M=" + std::to_string(trunc) + " samples=" + std::to_string(samples) +
                      " seed=" + std::to_string(seed) + "\n";
    int i = 0;
    for (const auto& c : cases) {
        ++i;
        out += "case " + std::to_string(i) + " (" + c.label + "): " + (c.pass ? "pass" : "FAIL") + "\n";
        if (!c.pass) {
            out += "  element: " + c.element + "\n";
            if (!c.expected.empty()) out += "  expected: " + c.expected + "\n";
            out += "  actual: " + c.actual + "\n";
        }
    }
    out += "verdict: " + std::string(passed() ? "PASS" : "FAIL") + " (" +
           std::to_string(pass_count()) + "/" + std::to_string(cases.size()) + ")\n";
    if (with_timing) out += "time: " + std::to_string(duration_seconds) + "s\n";
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- slotwise helpers for the Betti coproduct -----------------------------

GroupAlgebraElement eps_otimes_id(const TensorElement& t) {
    GroupAlgebraElement out;
    for (const auto& [w, fiber] : t.right_fibers()) out += GroupAlgebraElement::word(w, counit(fiber));
    return out;
}

GroupAlgebraElement id_otimes_eps(const TensorElement& t) {
    GroupAlgebraElement out;
    for (const auto& [w, fiber] : t.left_fibers()) out += GroupAlgebraElement::word(w, counit(fiber));
    return out;
}

Tensor3Element delta_otimes_id(const TensorElement& t) {
    Tensor3Element out;
    for (const auto& [w, fiber] : t.right_fibers()) {
        TensorElement df = coproduct(fiber);  // named: range-for over a temporary's terms() dangles
        for (const auto& [p, c] : df.terms()) out.add({p.first, p.second, w}, c);
    }
    return out;
}

Tensor3Element id_otimes_delta(const TensorElement& t) {
    Tensor3Element out;
    for (const auto& [w, fiber] : t.left_fibers()) {
        TensorElement df = coproduct(fiber);
        for (const auto& [p, c] : df.terms()) out.add({w, p.first, p.second}, c);
    }
    return out;
}

// --- slotwise helpers for the harmonic coproduct --------------------------

using Z3 = SparseMap<std::tuple<ZWord, ZWord, ZWord>>;

Z3 hdelta_otimes_id(const ZTensorElement& t, int n) {
    Z3 out;
    for (const auto& [p, c] : t) {
        ZWordElement u;
        u.add(p.first, Rational(1));
        for (const auto& [q, c2] : harmonic_coproduct(u, n))
            out.add({q.first, q.second, p.second}, c * c2);
    }
    return out;
}

Z3 id_otimes_hdelta(const ZTensorElement& t, int n) {
    Z3 out;
    for (const auto& [p, c] : t) {
        ZWordElement u;
        u.add(p.second, Rational(1));
        for (const auto& [q, c2] : harmonic_coproduct(u, n))
            out.add({p.first, q.first, q.second}, c * c2);
    }
    return out;
}

ZWordElement heps_otimes_id(const ZTensorElement& t) {
    ZWordElement out;
    for (const auto& [p, c] : t)
        if (p.first.empty()) out.add(p.second, c);
    return out;
}

ZWordElement id_otimes_heps(const ZTensorElement& t) {
    ZWordElement out;
    for (const auto& [p, c] : t)
        if (p.second.empty()) out.add(p.first, c);
    return out;
}

void enumerate_zwords(long degree_left, int n, ZWord& cur, std::vector<ZWord>& out) {
    out.push_back(cur);
    for (long part = 1; part <= degree_left; ++part) {
        for (int zeta = 0; zeta < n; ++zeta) {
            cur.push_back(ZLetter{part, zeta});
            enumerate_zwords(degree_left - part, n, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

VerificationReport verify_thm1(int n, int m, int samples, unsigned long long seed) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.id = "thm1";
    rep.n = n;
    rep.m = m;
    rep.trunc = m + 2;
    rep.samples = samples;
    rep.seed = seed;
    SeededRng rng(seed);
    // m-fold products multiply support sizes, so the per-factor budget stays
    // small to keep the mu-expansion of every sample at desk scale
    SampleBudget budget;
    budget.max_words = 2;
    budget.max_syllables = 2;
    budget.max_exp = 2;
    MuExpander ex(n, m + 2);
    for (int i = 1; i <= samples; ++i) {
        GroupAlgebraElement v = sample_FmW(n, m, rng, budget);
        FiltrationDegree dv = ex.filtration_degree(v);
        FiltrationDegree dt = ex.tensor_filtration_degree(coproduct(v));
        CaseResult c;
        c.label = "sample " + std::to_string(i);
        c.element = to_string(v);
        c.expected = "element and coproduct degrees >= " + std::to_string(m);
        c.actual = "element " + dv.str() + ", coproduct " + dt.str();
        c.pass = dv.admits(m) && dt.admits(m);
        rep.cases.push_back(std::move(c));
    }
    rep.duration_seconds = seconds_since(t0);
    return rep;
}

namespace {

CaseResult thm2_case(const std::string& label, const ZWordElement& z, int n, int m, MuExpander& ex) {
    CaseResult c;
    c.label = label;
    c.element = to_string(z);
    DRTensorElement rhs = zt_to_dr_tensor(harmonic_coproduct(z, n), n);
    c.expected = "slice at degree " + std::to_string(m) + ": " + to_string(rhs);
    try {
        GroupAlgebraElement v = rho_lift(zword_to_dr(z, n));
        auto [deg, slice] = ex.tensor_leading_term(coproduct(v));
        c.actual = "slice at degree " + std::to_string(deg) + ": " + to_string(slice);
        c.pass = deg == m && slice == rhs;
    } catch (const std::domain_error& e) {
        c.actual = std::string("error: ") + e.what();
        c.pass = false;
    }
    return c;
}

}  // namespace

VerificationReport verify_thm2(int n, int m) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.id = "thm2";
    rep.n = n;
    rep.m = m;
    rep.trunc = m + 2;
    MuExpander ex(n, m + 2);
    for (int a = 0; a < n; ++a)
        rep.cases.push_back(thm2_case("a=" + std::to_string(a), zw_gen(m, a), n, m, ex));
    // seeded degree-m words exercise multiplicativity of both sides
    SeededRng rng(9001ULL + 97ULL * static_cast<unsigned long long>(n) +
                  static_cast<unsigned long long>(m));
    for (int i = 1; i <= 5; ++i) {
        ZWord w = random_zword(rng, n, m);
        ZWordElement z;
        z.add(w, Rational(1));
        rep.cases.push_back(thm2_case("word " + std::to_string(i), z, n, m, ex));
    }
    rep.duration_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_axioms(int n, int samples, unsigned long long seed) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.id = "axioms";
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;

    // graded side: exhaustive through degree 4
    std::vector<ZWord> words;
    ZWord cur;
    enumerate_zwords(4, n, cur, words);
    for (const auto& w : words) {
        ZWordElement z;
        z.add(w, Rational(1));
        ZTensorElement d = harmonic_coproduct(z, n);
        bool coassoc = hdelta_otimes_id(d, n) == id_otimes_hdelta(d, n);
        bool counit_ok = heps_otimes_id(d) == z && id_otimes_heps(d) == z;
        CaseResult c;
        c.label = "harmonic " + to_string(w);
        c.element = to_string(z);
        c.expected = "coassociativity and counit laws";
        c.actual = std::string(coassoc ? "coassociative" : "NOT coassociative") + ", counit " +
                   (counit_ok ? "ok" : "violated");
        c.pass = coassoc && counit_ok;
        rep.cases.push_back(std::move(c));
    }

    SeededRng rng(seed);
    SampleBudget budget;
    // graded side: multiplicativity on seeded pairs
    for (int i = 1; i <= samples / 2 + 1; ++i) {
        ZWord wa = random_zword(rng, n, rng.uniform(1, 3));
        ZWord wb = random_zword(rng, n, rng.uniform(1, 3));
        ZWordElement a, b;
        a.add(wa, Rational(1));
        b.add(wb, Rational(1));
        bool ok = harmonic_coproduct(zw_mul(a, b), n) ==
                  zt_mul(harmonic_coproduct(a, n), harmonic_coproduct(b, n));
        CaseResult c;
        c.label = "harmonic product " + std::to_string(i);
        c.element = to_string(a) + " times " + to_string(b);
        c.expected = "coproduct of product = product of coproducts";
        c.actual = ok ? "equal" : "differ";
        c.pass = ok;
        rep.cases.push_back(std::move(c));
    }

    // filtered side: sampled W elements. The triple coproduct is cubic in the
    // term count of Delta(v), so keep the sampled words small.
    SampleBudget wbudget = budget;
    wbudget.max_words = 2;
    wbudget.max_syllables = 2;
    wbudget.max_exp = 2;
    for (int i = 1; i <= samples; ++i) {
        GroupAlgebraElement v = random_w_element(rng, wbudget);
        GroupAlgebraElement w = random_w_element(rng, wbudget);
        CaseResult c;
        c.label = "W sample " + std::to_string(i);
        c.element = to_string(v) + " and " + to_string(w);
        c.expected = "multiplicativity, coassociativity, counit laws";
        try {
            TensorElement dv = coproduct(v);
            bool mult = coproduct(v * w) == dv * coproduct(w);
            bool counit_ok = eps_otimes_id(dv) == v && id_otimes_eps(dv) == v;
            bool coassoc = delta_otimes_id(dv) == id_otimes_delta(dv);
            c.actual = std::string(mult ? "multiplicative" : "NOT multiplicative") + ", counit " +
                       (counit_ok ? "ok" : "violated") + ", " +
                       (coassoc ? "coassociative" : "NOT coassociative");
            c.pass = mult && counit_ok && coassoc;
        } catch (const std::domain_error& e) {
            c.actual = std::string("error: ") + e.what();
            c.pass = false;
        }
        rep.cases.push_back(std::move(c));
    }
    rep.duration_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_oracles(int n, int samples, unsigned long long seed, int trunc) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.id = "oracles";
    rep.n = n;
    rep.trunc = trunc;
    rep.samples = samples;
    rep.seed = seed;
    SeededRng rng(seed);
    SampleBudget budget;
    MuExpander ex(n, trunc);

    auto check = [&](const std::string& label, const GroupAlgebraElement& v) {
        CaseResult c;
        c.label = label;
        c.element = to_string(v);
        c.expected = "both algorithms agree";
        FiltrationDegree dmu = ex.filtration_degree(v);
        FiltrationDegree dor = oracle_filtration_degree(v, n, trunc);
        c.actual = "mu " + dmu.str() + ", schreier " + dor.str();
        c.pass = dmu == dor;
        rep.cases.push_back(std::move(c));
    };

    check("zero", GroupAlgebraElement());
    for (int i = 1; i <= samples; ++i) {
        if (i % 2 == 0) {
            check("random " + std::to_string(i), random_element(rng, budget));
        } else {
            int m = 1 + i % 4;
            check("stratum m=" + std::to_string(m) + " " + std::to_string(i),
                  sample_FmW(n, m, rng, budget));
        }
    }
    rep.duration_seconds = seconds_since(t0);
    return rep;
}

}  // namespace muharm
