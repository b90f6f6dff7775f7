#include "muharm/mu_bridge.hpp"

#include <cassert>
#include <stdexcept>

namespace muharm {

TruncatedDRSeries::TruncatedDRSeries(int n, int trunc) : n_(n), trunc_(trunc) {
    comps_.reserve(trunc + 1);
    for (int d = 0; d <= trunc; ++d) comps_.emplace_back(n);
}

TruncatedDRSeries TruncatedDRSeries::one(int n, int trunc) {
    TruncatedDRSeries s(n, trunc);
    s.comps_[0].add_term(DRMonomial{}, Rational(1));
    return s;
}

void TruncatedDRSeries::add_monomial(DRMonomial m, const Rational& c) {
    long d = m.degree();
    if (d > trunc_) return;
    comps_[d].add_term(std::move(m), c);
}

TruncatedDRSeries& TruncatedDRSeries::operator+=(const TruncatedDRSeries& o) {
    assert(trunc_ == o.trunc_ && n_ == o.n_);
    for (int d = 0; d <= trunc_; ++d) comps_[d] += o.comps_[d];
    return *this;
}

TruncatedDRSeries& TruncatedDRSeries::operator-=(const TruncatedDRSeries& o) {
    assert(trunc_ == o.trunc_ && n_ == o.n_);
    for (int d = 0; d <= trunc_; ++d) comps_[d] -= o.comps_[d];
    return *this;
}

TruncatedDRSeries& TruncatedDRSeries::operator*=(const Rational& c) {
    for (auto& comp : comps_) comp *= c;
    return *this;
}

TruncatedDRSeries operator*(const TruncatedDRSeries& a, const TruncatedDRSeries& b) {
    assert(a.n_ == b.n_ && a.trunc_ == b.trunc_);
    TruncatedDRSeries out(a.n_, a.trunc_);
    for (int i = 0; i <= a.trunc_; ++i) {
        if (a.comps_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.trunc_; ++j) {
            if (b.comps_[j].is_zero()) continue;
            out.comps_[i + j] += a.comps_[i] * b.comps_[j];
        }
    }
    return out;
}

bool TruncatedDRSeries::is_zero() const { return min_degree() < 0; }

int TruncatedDRSeries::min_degree() const {
    for (int d = 0; d <= trunc_; ++d)
        if (!comps_[d].is_zero()) return d;
    return -1;
}

void DRTensorElement::add_term(DRMonomial a, DRMonomial b, const Rational& c) {
    auto norm = [this](DRMonomial& m) {
        m.eta = ((m.eta % n_) + n_) % n_;
        for (auto& blk : m.blocks) blk.zeta = ((blk.zeta % n_) + n_) % n_;
    };
    norm(a);
    norm(b);
    terms_.add({std::move(a), std::move(b)}, c);
}

DRTensorElement& DRTensorElement::operator+=(const DRTensorElement& o) {
    assert(n_ == o.n_);
    terms_ += o.terms_;
    return *this;
}

DRTensorElement& DRTensorElement::operator-=(const DRTensorElement& o) {
    assert(n_ == o.n_);
    terms_ -= o.terms_;
    return *this;
}

int TruncatedDRTensor::min_degree() const {
    for (int d = 0; d <= trunc; ++d)
        if (!comps[d].is_zero()) return d;
    return -1;
}

// --- expansion ------------------------------------------------------------

TruncatedDRSeries MuExpander::expand_run(Letter l, long e) const {
    TruncatedDRSeries s(n_, trunc_);
    if (l == Letter::X0) {
        int eta = static_cast<int>(((e % n_) + n_) % n_);
        Rational frac(e, n_);
        for (int k = 0; k <= trunc_; ++k) {
            Rational c = binomial(frac, k);
            if (c.is_zero()) break;
            s.add_monomial(DRMonomial{k, {}, eta}, c);
        }
    } else {
        Rational ex(e);
        for (int k = 0; k <= trunc_; ++k) {
            Rational c = binomial(ex, k);
            if (c.is_zero()) break;
            s.add_monomial(DRMonomial{0, std::vector<DRBlock>(k, DRBlock{0, 0}), 0}, c);
        }
    }
    return s;
}

const TruncatedDRSeries& MuExpander::expand_word(const ReducedWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    TruncatedDRSeries s = TruncatedDRSeries::one(n_, trunc_);
    const auto& syl = w.syllables();
    if (!syl.empty()) {
        // peel the trailing run so every prefix lands in the cache; supports
        // coming from products share long prefixes, which makes repeat words
        // cost a single series multiplication
        ReducedWord prefix = ReducedWord::reduce({syl.data(), syl.size() - 1});
        s = expand_word(prefix) * expand_run(syl.back().letter, syl.back().exponent);
    }
    return cache_.emplace(w, std::move(s)).first->second;
}

TruncatedDRSeries MuExpander::expand(const GroupAlgebraElement& v) {
    TruncatedDRSeries out(n_, trunc_);
    for (const auto& [w, c] : v.terms()) {
        TruncatedDRSeries term = expand_word(w);
        term *= c;
        out += term;
    }
    return out;
}

FiltrationDegree MuExpander::filtration_degree(const GroupAlgebraElement& v) {
    int d = expand(v).min_degree();
    return d < 0 ? FiltrationDegree::at_least(trunc_ + 1) : FiltrationDegree::exact(d);
}

std::pair<int, DRElement> MuExpander::leading_term(const GroupAlgebraElement& v) {
    TruncatedDRSeries s = expand(v);
    int d = s.min_degree();
    if (d < 0) throw std::domain_error("valuation exceeds truncation");
    return {d, s.component(d)};
}

TruncatedDRTensor MuExpander::expand_tensor(const TensorElement& t) {
    TruncatedDRTensor out{n_, trunc_, {}};
    out.comps.reserve(trunc_ + 1);
    for (int d = 0; d <= trunc_; ++d) out.comps.emplace_back(n_);
    for (const auto& [pair, c] : t.terms()) {
        // map node stability keeps sa valid across the second cache lookup
        const TruncatedDRSeries& sa = expand_word(pair.first);
        const TruncatedDRSeries& sb = expand_word(pair.second);
        for (int i = 0; i <= trunc_; ++i) {
            if (sa.component(i).is_zero()) continue;
            for (int j = 0; i + j <= trunc_; ++j) {
                if (sb.component(j).is_zero()) continue;
                for (const auto& [ma, ca] : sa.component(i).terms())
                    for (const auto& [mb, cb] : sb.component(j).terms())
                        out.comps[i + j].add_term(ma, mb, c * ca * cb);
            }
        }
    }
    return out;
}

FiltrationDegree MuExpander::tensor_filtration_degree(const TensorElement& t) {
    int d = expand_tensor(t).min_degree();
    return d < 0 ? FiltrationDegree::at_least(trunc_ + 1) : FiltrationDegree::exact(d);
}

std::pair<int, DRTensorElement> MuExpander::tensor_leading_term(const TensorElement& t) {
    TruncatedDRTensor s = expand_tensor(t);
    int d = s.min_degree();
    if (d < 0) throw std::domain_error("valuation exceeds truncation");
    return {d, std::move(s.comps[d])};
}

TruncatedDRSeries mu_expand(const GroupAlgebraElement& v, int n, int trunc) {
    return MuExpander(n, trunc).expand(v);
}

FiltrationDegree filtration_degree(const GroupAlgebraElement& v, int n, int trunc) {
    return MuExpander(n, trunc).filtration_degree(v);
}

std::pair<int, DRElement> leading_term(const GroupAlgebraElement& v, int n, int trunc) {
    return MuExpander(n, trunc).leading_term(v);
}

FiltrationDegree tensor_filtration_degree(const TensorElement& t, int n, int trunc) {
    return MuExpander(n, trunc).tensor_filtration_degree(t);
}

std::pair<int, DRTensorElement> tensor_leading_term(const TensorElement& t, int n, int trunc) {
    return MuExpander(n, trunc).tensor_leading_term(t);
}

// --- lift -----------------------------------------------------------------

namespace {

GroupAlgebraElement x0n_minus_1_pow(int n, long k) {
    GroupAlgebraElement base = x0_pow(n) - GroupAlgebraElement(1);
    return base.pow(k);
}

}  // namespace

GroupAlgebraElement rho_lift(const DRElement& d) {
    int n = d.modulus();
    GroupAlgebraElement out;
    GroupAlgebraElement x1m1 = x1_pow(1) - GroupAlgebraElement(1);
    for (const auto& [m, c] : d.terms()) {
        GroupAlgebraElement acc = x0n_minus_1_pow(n, m.a0);
        for (const auto& blk : m.blocks) {
            acc = acc * x0_pow(blk.zeta) * x1m1;
            if (blk.e0 > 0) acc = acc * x0n_minus_1_pow(n, blk.e0);
        }
        if (m.eta != 0) acc = acc * x0_pow(m.eta);
        out += acc * c;
    }
    return out;
}

DRTensorElement zt_to_dr_tensor(const ZTensorElement& z, int n) {
    DRTensorElement out(n);
    for (const auto& [pair, c] : z) {
        ZWordElement left, right;
        left.add(pair.first, Rational(1));
        right.add(pair.second, Rational(1));
        DRElement dl = zword_to_dr(left, n);
        DRElement dr = zword_to_dr(right, n);
        for (const auto& [ma, ca] : dl.terms())
            for (const auto& [mb, cb] : dr.terms())
                out.add_term(ma, mb, c * ca * cb);
    }
    return out;
}

}  // namespace muharm
