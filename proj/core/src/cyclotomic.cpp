#include "muharm/cyclotomic.hpp"

#include <stdexcept>

namespace muharm {

MuNElement MuNElement::generator_power(int n, long k) {
    MuNElement e(n);
    e.add_term(k, Rational(1));
    return e;
}

MuNElement& MuNElement::operator+=(const MuNElement& o) {
    for (const auto& [r, c] : o.coeffs_) coeffs_.add(r, c);
    return *this;
}

MuNElement& MuNElement::operator-=(const MuNElement& o) {
    for (const auto& [r, c] : o.coeffs_) coeffs_.add(r, -c);
    return *this;
}

MuNElement operator*(const MuNElement& a, const MuNElement& b) {
    MuNElement out(a.n_);
    for (const auto& [ra, ca] : a.coeffs_)
        for (const auto& [rb, cb] : b.coeffs_)
            out.add_term(ra + rb, ca * cb);
    return out;
}

MuNElement project_to_muN(const GroupAlgebraElement& v, int n) {
    MuNElement out(n);
    for (const auto& [w, c] : v.terms()) out.add_term(w.x0_degree(), c);
    return out;
}

// --- kernel words ---------------------------------------------------------

void KernelWord::append_run(int letter, long exponent) {
    if (exponent == 0) return;
    if (!sylls_.empty() && sylls_.back().letter == letter) {
        sylls_.back().exponent += exponent;
        if (sylls_.back().exponent == 0) sylls_.pop_back();
        return;
    }
    sylls_.push_back({letter, exponent});
}

KernelWord KernelWord::reduce(const std::vector<KernelSyllable>& sylls) {
    KernelWord w;
    for (const auto& s : sylls) w.append_run(s.letter, s.exponent);
    return w;
}

long KernelWord::letter_length() const {
    long n = 0;
    for (const auto& s : sylls_) n += s.exponent < 0 ? -s.exponent : s.exponent;
    return n;
}

namespace {

long floordiv(long a, long b) {
    long q = a / b, r = a % b;
    return r != 0 && (r < 0) != (b < 0) ? q - 1 : q;
}

long floormod(long a, long b) { return a - floordiv(a, b) * b; }

}  // namespace

CosetDecomposition coset_decompose(const GroupAlgebraElement& v, int n) {
    CosetDecomposition out{n, std::vector<KernelAlgebraElement>(n)};
    for (const auto& [w, c] : v.terms()) {
        // Schreier rewriting with transversal {X0^a}: scanning with coset
        // state r, a run X0^k emits g^floor((r+k)/N) and moves r to
        // (r+k) mod N; a run X1^k emits h_r^k and keeps r.
        KernelWord kw;
        long r = 0;
        for (const auto& s : w.syllables()) {
            if (s.letter == Letter::X0) {
                kw.append_run(0, floordiv(r + s.exponent, n));
                r = floormod(r + s.exponent, n);
            } else {
                kw.append_run(1 + static_cast<int>(r), s.exponent);
            }
        }
        out.components[r].add(kw, c);
    }
    return out;
}

ReducedWord kernel_word_to_f2(const KernelWord& w, int n) {
    ReducedWord out;
    for (const auto& s : w.syllables()) {
        if (s.letter == 0) {
            out = out * ReducedWord::power(Letter::X0, static_cast<long>(n) * s.exponent);
        } else {
            long a = s.letter - 1;
            out = out * ReducedWord::power(Letter::X0, a) *
                  ReducedWord::power(Letter::X1, s.exponent) *
                  ReducedWord::power(Letter::X0, -a);
        }
    }
    return out;
}

GroupAlgebraElement coset_recompose(const CosetDecomposition& d) {
    GroupAlgebraElement out;
    for (int a = 0; a < d.n; ++a) {
        for (const auto& [kw, c] : d.components[a]) {
            ReducedWord w = kernel_word_to_f2(kw, d.n) * ReducedWord::power(Letter::X0, a);
            out.add_term(w, c);
        }
    }
    return out;
}

// --- Magnus series --------------------------------------------------------

FreeTruncatedSeries FreeTruncatedSeries::constant(int max_len, const Rational& c) {
    FreeTruncatedSeries s(max_len);
    s.add_term({}, c);
    return s;
}

FreeTruncatedSeries FreeTruncatedSeries::letter(int max_len, int idx) {
    FreeTruncatedSeries s(max_len);
    s.add_term({idx}, Rational(1));
    return s;
}

void FreeTruncatedSeries::add_term(const Word& w, const Rational& c) {
    if (static_cast<int>(w.size()) <= max_len_) terms_.add(w, c);
}

FreeTruncatedSeries& FreeTruncatedSeries::operator+=(const FreeTruncatedSeries& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeTruncatedSeries& FreeTruncatedSeries::operator-=(const FreeTruncatedSeries& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeTruncatedSeries operator*(const FreeTruncatedSeries& a, const FreeTruncatedSeries& b) {
    FreeTruncatedSeries out(a.max_len_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_len_) continue;
            FreeTruncatedSeries::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.terms_.add(w, ca * cb);
        }
    }
    return out;
}

FreeTruncatedSeries FreeTruncatedSeries::letter_power(int max_len, int idx, long e) {
    // (1+u)^e = sum_k C(e,k) u^k holds truncated for negative e as well,
    // where it agrees with powers of the geometric series 1 - u + u^2 - ...
    FreeTruncatedSeries s(max_len);
    Rational ex(e);
    for (int k = 0; k <= max_len; ++k) {
        Rational c = binomial(ex, k);
        if (c.is_zero()) break;
        s.add_term(Word(static_cast<size_t>(k), idx), c);
    }
    return s;
}

int FreeTruncatedSeries::min_degree() const {
    int best = -1;
    for (const auto& [w, c] : terms_) {
        int len = static_cast<int>(w.size());
        if (best < 0 || len < best) best = len;
    }
    return best;
}

FiltrationDegree oracle_filtration_degree(const GroupAlgebraElement& v, int n, int max_len) {
    CosetDecomposition d = coset_decompose(v, n);
    int best = -1;
    for (const auto& comp : d.components) {
        FreeTruncatedSeries acc(max_len);
        for (const auto& [kw, c] : comp) {
            FreeTruncatedSeries term = FreeTruncatedSeries::constant(max_len, c);
            for (const auto& s : kw.syllables())
                term = term * FreeTruncatedSeries::letter_power(max_len, s.letter, s.exponent);
            acc += term;
        }
        int deg = acc.min_degree();
        if (deg >= 0 && (best < 0 || deg < best)) best = deg;
    }
    if (best < 0) return FiltrationDegree::at_least(max_len + 1);
    return FiltrationDegree::exact(best);
}

}  // namespace muharm
