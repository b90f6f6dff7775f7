#include "muharm/betti_w.hpp"

#include <iterator>
#include <map>
#include <stdexcept>

namespace muharm {

GeneratorPoly gp_one() {
    GeneratorPoly p;
    p.add({}, Rational(1));
    return p;
}

GeneratorPoly gp_letter(GenLetter l) {
    GeneratorPoly p;
    p.add({l}, Rational(1));
    return p;
}

GeneratorPoly gp_mul(const GeneratorPoly& a, const GeneratorPoly& b) {
    GeneratorPoly out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            GenWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

namespace {

GroupAlgebraElement x1_minus_1() { return x1_pow(1) - GroupAlgebraElement(1); }

GroupAlgebraElement eval_letter(const GenLetter& l) {
    if (l.is_T) return x1_pow(-1);
    return x0_pow(l.n) * x1_minus_1();
}

}  // namespace

GroupAlgebraElement evaluate_generators(const GeneratorPoly& p) {
    GroupAlgebraElement out;
    for (const auto& [w, c] : p) {
        GroupAlgebraElement acc(1);
        for (const auto& l : w) acc = acc * eval_letter(l);
        out += acc * c;
    }
    return out;
}

std::optional<Rational> is_in_W(const GroupAlgebraElement& v) {
    std::map<ReducedWord, Rational> class_sums;
    for (const auto& [w, c] : v.terms()) {
        auto [prefix, t] = w.split_trailing(Letter::X1);
        (void)t;
        class_sums[prefix] += c;
    }
    Rational constant(0);
    for (const auto& [prefix, sum] : class_sums) {
        if (prefix.is_identity()) {
            constant = sum;
        } else if (!sum.is_zero()) {
            return std::nullopt;
        }
    }
    return constant;
}

GroupAlgebraElement right_divide_by_x1m1(const GroupAlgebraElement& v) {
    // classwise: if v = sum_t a_t u X1^t then q = sum_t b_t u X1^t with
    // b_t = -sum_{s<=t} a_s; finite support because the class sums to zero.
    std::map<ReducedWord, std::map<long, Rational>> classes;
    for (const auto& [w, c] : v.terms()) {
        auto [prefix, t] = w.split_trailing(Letter::X1);
        classes[prefix][t] += c;
    }
    GroupAlgebraElement q;
    for (const auto& [prefix, coeffs] : classes) {
        if (coeffs.empty()) continue;
        long lo = coeffs.begin()->first;
        long hi = coeffs.rbegin()->first;
        Rational running(0);
        for (long t = lo; t < hi; ++t) {
            auto it = coeffs.find(t);
            if (it != coeffs.end()) running += it->second;
            q.add_term(prefix * ReducedWord::power(Letter::X1, t), -running);
        }
    }
    return q;
}

namespace {

// Presentation of w (X1 - 1) in the generators, by peeling the leading
// X0-run and X1-run of w:
//   w = X0^n                   ->  G_n
//   w = X1^-p u                ->  T^p * F(u)
//   w = X0^a X1^m u   (m > 0)  ->  sum_{i=1..m} C(m,i) G_a G_0^{i-1} F(u)
//                                  + F(X0^a u)
//   w = X0^a X1^-p u  (p > 0)  ->  sum_{i=1..p} C(p,i)(-1)^i
//                                      G_a T (T G_0)^{i-1} F(u)
//                                  + F(X0^a u)
// using X1^m = ((X1-1)+1)^m and X1^-1 = 1 - X1^-1 (X1-1). Each recursive
// call has strictly fewer X1-runs, so this terminates.
GeneratorPoly decompose_word(const ReducedWord& w) {
    const auto& sylls = w.syllables();
    if (sylls.empty()) return gp_letter(GenLetter::G(0));
    if (sylls.size() == 1 && sylls[0].letter == Letter::X0)
        return gp_letter(GenLetter::G(sylls[0].exponent));

    size_t idx = 0;
    long a = 0;
    if (sylls[idx].letter == Letter::X0) a = sylls[idx++].exponent;
    long m = sylls[idx++].exponent;
    ReducedWord u;
    {
        std::vector<Syllable> tail(sylls.begin() + idx, sylls.end());
        u = ReducedWord::reduce(tail);
    }
    GeneratorPoly fu = decompose_word(u);

    if (a == 0 && m < 0) {
        GeneratorPoly head;
        head.add(GenWord(static_cast<size_t>(-m), GenLetter::T()), Rational(1));
        return gp_mul(head, fu);
    }

    GeneratorPoly out = decompose_word(ReducedWord::power(Letter::X0, a) * u);
    if (m > 0) {
        for (long i = 1; i <= m; ++i) {
            GenWord head;
            head.push_back(GenLetter::G(a));
            for (long j = 1; j < i; ++j) head.push_back(GenLetter::G(0));
            GeneratorPoly term;
            for (const auto& [gw, c] : fu) {
                GenWord full = head;
                full.insert(full.end(), gw.begin(), gw.end());
                term.add(full, c);
            }
            term *= binomial(Rational(m), static_cast<int>(i));
            out += term;
        }
    } else {
        long p = -m;
        for (long i = 1; i <= p; ++i) {
            GenWord head;
            head.push_back(GenLetter::G(a));
            head.push_back(GenLetter::T());
            for (long j = 1; j < i; ++j) {
                head.push_back(GenLetter::T());
                head.push_back(GenLetter::G(0));
            }
            GeneratorPoly term;
            for (const auto& [gw, c] : fu) {
                GenWord full = head;
                full.insert(full.end(), gw.begin(), gw.end());
                term.add(full, c);
            }
            Rational coef = binomial(Rational(p), static_cast<int>(i));
            if (i % 2 != 0) coef = -coef;
            term *= coef;
            out += term;
        }
    }
    return out;
}

}  // namespace

GeneratorPoly decompose_in_generators(const GroupAlgebraElement& v) {
    auto kappa = is_in_W(v);
    if (!kappa) throw std::domain_error("not in W^B");
    GroupAlgebraElement rest = v;
    rest -= GroupAlgebraElement(*kappa);
    GroupAlgebraElement q = right_divide_by_x1m1(rest);
    GeneratorPoly out;
    if (!kappa->is_zero()) out.add({}, *kappa);
    for (const auto& [w, c] : q.terms()) {
        GeneratorPoly f = decompose_word(w);
        f *= c;
        out += f;
    }
    return out;
}

namespace {

TensorElement coproduct_letter(const GenLetter& l) {
    if (l.is_T) return TensorElement::pure(x1_pow(-1), x1_pow(-1));
    GroupAlgebraElement x1m1 = x1_minus_1();
    GroupAlgebraElement g = x0_pow(l.n) * x1m1;
    TensorElement t = TensorElement::pure(g, GroupAlgebraElement(1)) +
                      TensorElement::pure(GroupAlgebraElement(1), g);
    TensorElement cross = signed_range_sum(
        [&](long k) {
            return TensorElement::pure(x0_pow(k) * x1m1, x0_pow(l.n - k) * x1m1);
        },
        1, l.n - 1, TensorElement());
    t -= cross;
    return t;
}

}  // namespace

TensorElement coproduct_of_generators(const GeneratorPoly& p) {
    TensorElement out;
    for (const auto& [w, c] : p) {
        TensorElement acc(Rational(1));
        for (const auto& l : w) acc = acc * coproduct_letter(l);
        acc *= c;
        out += acc;
    }
    return out;
}

TensorElement coproduct(const GroupAlgebraElement& v) {
    return coproduct_of_generators(decompose_in_generators(v));
}

TensorElement coproduct_closed_form(int m, const LaurentPoly& P, int n) {
    GroupAlgebraElement x1m1 = x1_minus_1();
    GroupAlgebraElement xn_m1 = x0_pow(n) - GroupAlgebraElement(1);
    GroupAlgebraElement e = xn_m1.pow(m - 1) * laurent_to_x0(P) * x1m1;
    TensorElement out = TensorElement::pure(e, GroupAlgebraElement(1)) +
                        TensorElement::pure(GroupAlgebraElement(1), e);
    LaurentPoly2 F = divided_difference(P, P, m, n);
    for (const auto& [ij, c] : F.terms()) {
        TensorElement t = TensorElement::pure(x0_pow(ij.first) * x1m1, x0_pow(ij.second) * x1m1);
        t *= c;
        out -= t;
    }
    return out;
}

Rational counit(const GroupAlgebraElement& v) {
    if (!is_in_W(v)) throw std::domain_error("not in W^B");
    Rational s(0);
    for (const auto& [w, c] : v.terms()) s += c;
    return s;
}

TensorElement twisted_coproduct(long a, long b, const GroupAlgebraElement& v) {
    TensorElement t = coproduct(v);
    ReducedWord la = ReducedWord::power(Letter::X1, a), lai = la.inverse();
    ReducedWord lb = ReducedWord::power(Letter::X1, b), lbi = lb.inverse();
    TensorElement out;
    for (const auto& [p, c] : t.terms())
        out.add_term({la * p.first * lai, lb * p.second * lbi}, c);
    return out;
}

GeneratorPoly randomize_decomposition(const GeneratorPoly& p, SeededRng& rng, int rounds) {
    GeneratorPoly cur = p;
    for (int r = 0; r < rounds; ++r) {
        if (cur.is_zero()) break;
        long pick = rng.uniform(0, static_cast<long>(cur.size()) - 1);
        auto it = cur.begin();
        std::advance(it, pick);
        GenWord w = it->first;
        Rational c = it->second;
        long pos = rng.uniform(0, static_cast<long>(w.size()));
        if (rng.coin()) {
            // insert T + T G_0 (evaluates to 1) at pos
            GenWord w1 = w, w2 = w;
            w1.insert(w1.begin() + pos, GenLetter::T());
            w2.insert(w2.begin() + pos, GenLetter::G(0));
            w2.insert(w2.begin() + pos, GenLetter::T());
            cur.add(w, -c);
            cur.add(w1, c);
            cur.add(w2, c);
        } else {
            // rewrite one T as 1 - T G_0, scanning for a T from pos on
            size_t start = static_cast<size_t>(pos) < w.size() ? static_cast<size_t>(pos) : 0;
            long t_at = -1;
            for (size_t i = start; i < w.size() && t_at < 0; ++i)
                if (w[i].is_T) t_at = static_cast<long>(i);
            for (size_t i = 0; i < start && t_at < 0; ++i)
                if (w[i].is_T) t_at = static_cast<long>(i);
            if (t_at < 0) continue;
            GenWord w1 = w, w2 = w;
            w1.erase(w1.begin() + t_at);
            w2.insert(w2.begin() + t_at + 1, GenLetter::G(0));
            cur.add(w, -c);
            cur.add(w1, c);
            cur.add(w2, -c);
        }
    }
    return cur;
}

}  // namespace muharm
