#include "muharm/derham.hpp"

#include <cassert>
#include <stdexcept>

namespace muharm {

namespace {
int modn(long v, int n) { return static_cast<int>(((v % n) + n) % n); }
}  // namespace

DRElement DRElement::e0(int n) {
    DRElement e(n);
    e.add_term(DRMonomial{1, {}, 0}, Rational(1));
    return e;
}

DRElement DRElement::e1(int n) {
    DRElement e(n);
    e.add_term(DRMonomial{0, {DRBlock{0, 0}}, 0}, Rational(1));
    return e;
}

DRElement DRElement::zeta_power(int n, long k) {
    DRElement e(n);
    e.add_term(DRMonomial{0, {}, modn(k, n)}, Rational(1));
    return e;
}

DRElement DRElement::monomial(int n, DRMonomial m, const Rational& c) {
    DRElement e(n);
    e.add_term(std::move(m), c);
    return e;
}

void DRElement::add_term(DRMonomial m, const Rational& c) {
    m.eta = modn(m.eta, n_);
    for (auto& b : m.blocks) b.zeta = modn(b.zeta, n_);
    terms_.add(m, c);
}

DRElement& DRElement::operator+=(const DRElement& o) {
    assert(n_ == o.n_);
    for (const auto& [m, c] : o.terms_) terms_.add(m, c);
    return *this;
}

DRElement& DRElement::operator-=(const DRElement& o) {
    assert(n_ == o.n_);
    for (const auto& [m, c] : o.terms_) terms_.add(m, -c);
    return *this;
}

namespace {

// Junction rule: the left factor's trailing group element commutes through
// the right factor's leading e0 run and lands on its first e1 (or merges
// into the right trailing eta when there is none).
DRMonomial mono_mul(const DRMonomial& x, const DRMonomial& y, int n) {
    DRMonomial out;
    if (x.blocks.empty()) {
        out.a0 = x.a0 + y.a0;
        out.blocks = y.blocks;
        if (!out.blocks.empty()) {
            out.blocks.front().zeta = modn(out.blocks.front().zeta + x.eta, n);
            out.eta = y.eta;
        } else {
            out.eta = modn(x.eta + y.eta, n);
        }
        return out;
    }
    out.a0 = x.a0;
    out.blocks = x.blocks;
    out.blocks.back().e0 += y.a0;
    if (y.blocks.empty()) {
        out.eta = modn(x.eta + y.eta, n);
        return out;
    }
    out.blocks.reserve(out.blocks.size() + y.blocks.size());
    for (size_t i = 0; i < y.blocks.size(); ++i) out.blocks.push_back(y.blocks[i]);
    out.blocks[x.blocks.size()].zeta = modn(out.blocks[x.blocks.size()].zeta + x.eta, n);
    out.eta = y.eta;
    return out;
}

}  // namespace

DRElement operator*(const DRElement& a, const DRElement& b) {
    assert(a.n_ == b.n_);
    DRElement out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.terms_.add(mono_mul(ma, mb, a.n_), ca * cb);
    return out;
}

DRElement dr_mul(const DRElement& a, const DRElement& b) { return a * b; }

bool DRElement::is_homogeneous(long* deg) const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        long md = m.degree();
        if (d < 0) d = md;
        else if (d != md) return false;
    }
    if (deg) *deg = d < 0 ? 0 : d;
    return true;
}

DRElement DRElement::homogeneous_component(long d) const {
    DRElement out(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.add(m, c);
    return out;
}

long DRElement::min_degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) {
        long d = m.degree();
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// --- z-words --------------------------------------------------------------

long z_degree(const ZWord& w) {
    long d = 0;
    for (const auto& l : w) d += l.n;
    return d;
}

ZWordElement zw_one() {
    ZWordElement e;
    e.add({}, Rational(1));
    return e;
}

ZWordElement zw_gen(long n, int zeta) {
    ZWordElement e;
    e.add({ZLetter{n, zeta}}, Rational(1));
    return e;
}

ZWordElement zw_mul(const ZWordElement& a, const ZWordElement& b) {
    ZWordElement out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            ZWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

ZWordElement zw_component(const ZWordElement& z, long degree) {
    ZWordElement out;
    for (const auto& [w, c] : z)
        if (z_degree(w) == degree) out.add(w, c);
    return out;
}

ZTensorElement zt_pure(const ZWordElement& a, const ZWordElement& b) {
    ZTensorElement out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            out.add({wa, wb}, ca * cb);
    return out;
}

ZTensorElement zt_mul(const ZTensorElement& a, const ZTensorElement& b) {
    ZTensorElement out;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            ZWord l = pa.first, r = pa.second;
            l.insert(l.end(), pb.first.begin(), pb.first.end());
            r.insert(r.end(), pb.second.begin(), pb.second.end());
            out.add({std::move(l), std::move(r)}, ca * cb);
        }
    }
    return out;
}

DRElement zword_to_dr(const ZWordElement& z, int n) {
    DRElement out(n);
    for (const auto& [w, c] : z) {
        DRMonomial m;
        if (!w.empty()) {
            m.a0 = w[0].n - 1;
            for (size_t i = 0; i < w.size(); ++i) {
                long next_e0 = i + 1 < w.size() ? w[i + 1].n - 1 : 0;
                m.blocks.push_back(DRBlock{modn(w[i].zeta, n), next_e0});
            }
        }
        Rational coef = w.size() % 2 == 0 ? c : -c;
        out.add_term(std::move(m), coef);
    }
    return out;
}

ZWordElement dr_to_zword(const DRElement& d) {
    ZWordElement out;
    for (const auto& [m, c] : d.terms()) {
        if (m.blocks.empty()) {
            if (m.a0 != 0 || m.eta != 0) throw std::domain_error("not in W^dR");
            out.add({}, c);
            continue;
        }
        if (m.eta != 0 || m.blocks.back().e0 != 0) throw std::domain_error("not in W^dR");
        ZWord w;
        w.push_back(ZLetter{m.a0 + 1, m.blocks[0].zeta});
        for (size_t i = 1; i < m.blocks.size(); ++i)
            w.push_back(ZLetter{m.blocks[i - 1].e0 + 1, m.blocks[i].zeta});
        out.add(w, w.size() % 2 == 0 ? c : -c);
    }
    return out;
}

ZTensorElement harmonic_coproduct(const ZWordElement& z, int n) {
    ZTensorElement out;
    for (const auto& [w, c] : z) {
        ZTensorElement acc = zt_pure(zw_one(), zw_one());
        for (const auto& letter : w) {
            ZTensorElement delta;
            ZWordElement gen = zw_gen(letter.n, modn(letter.zeta, n));
            delta += zt_pure(gen, zw_one());
            delta += zt_pure(zw_one(), gen);
            for (long k = 1; k < letter.n; ++k)
                for (int b = 0; b < n; ++b)
                    delta += zt_pure(zw_gen(k, b), zw_gen(letter.n - k, modn(letter.zeta - b, n)));
            acc = zt_mul(acc, delta);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

}  // namespace muharm
