#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "muharm/sparse.hpp"

namespace muharm {

/// One "zeta^c e1 e0^a" segment of a normal-form monomial.
struct DRBlock {
    int zeta;   // in [0, N)
    long e0;    // >= 0

    friend bool operator==(const DRBlock&, const DRBlock&) = default;
    friend auto operator<=>(const DRBlock&, const DRBlock&) = default;
};

/// Normal form e0^a0 (z^{c_1} e1 e0^{a_1}) ... (z^{c_k} e1 e0^{a_k}) z^eta.
/// Group elements are pushed left through e0 runs until an e1 blocks them;
/// whatever cannot pass any e1 accumulates in the trailing eta.
struct DRMonomial {
    long a0 = 0;
    std::vector<DRBlock> blocks;
    int eta = 0;

    long degree() const {
        long d = a0;
        for (const auto& b : blocks) d += 1 + b.e0;
        return d;
    }

    friend bool operator==(const DRMonomial&, const DRMonomial&) = default;
    friend auto operator<=>(const DRMonomial&, const DRMonomial&) = default;
};

/// Element of the graded algebra on e0, e1 and the cyclic group of order N.
class DRElement {
public:
    explicit DRElement(int n) : n_(n) {}
    DRElement(int n, const Rational& c) : n_(n) {
        terms_.add(DRMonomial{}, c);
    }

    static DRElement e0(int n);
    static DRElement e1(int n);
    static DRElement zeta_power(int n, long k);
    static DRElement monomial(int n, DRMonomial m, const Rational& c);

    int modulus() const { return n_; }
    bool is_zero() const { return terms_.is_zero(); }

    void add_term(DRMonomial m, const Rational& c);
    Rational coefficient(const DRMonomial& m) const { return terms_.coefficient(m); }

    DRElement& operator+=(const DRElement& o);
    DRElement& operator-=(const DRElement& o);
    friend DRElement operator+(DRElement a, const DRElement& b) { return a += b; }
    friend DRElement operator-(DRElement a, const DRElement& b) { return a -= b; }
    DRElement& operator*=(const Rational& c) { terms_ *= c; return *this; }
    friend DRElement operator*(DRElement a, const Rational& c) { return a *= c; }
    friend DRElement operator*(const Rational& c, DRElement a) { return a *= c; }
    friend DRElement operator*(const DRElement& a, const DRElement& b);

    friend bool operator==(const DRElement& a, const DRElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// True when every monomial has the same degree; writes it to deg.
    bool is_homogeneous(long* deg = nullptr) const;
    DRElement homogeneous_component(long d) const;
    /// Smallest monomial degree present; -1 when zero.
    long min_degree() const;

    const SparseMap<DRMonomial>& terms() const { return terms_; }

private:
    int n_;
    SparseMap<DRMonomial> terms_;
};

DRElement dr_mul(const DRElement& a, const DRElement& b);

// --- z-word basis of W^dR -------------------------------------------------

struct ZLetter {
    long n;     // >= 1
    int zeta;   // in [0, N)

    friend bool operator==(const ZLetter&, const ZLetter&) = default;
    friend auto operator<=>(const ZLetter&, const ZLetter&) = default;
};

using ZWord = std::vector<ZLetter>;

long z_degree(const ZWord& w);

/// Elements of W^dR in the free z-word basis. Product = concatenation.
using ZWordElement = SparseMap<ZWord>;

ZWordElement zw_one();
ZWordElement zw_gen(long n, int zeta);
ZWordElement zw_mul(const ZWordElement& a, const ZWordElement& b);
ZWordElement zw_component(const ZWordElement& z, long degree);

using ZWordPair = std::pair<ZWord, ZWord>;
using ZTensorElement = SparseMap<ZWordPair>;

ZTensorElement zt_pure(const ZWordElement& a, const ZWordElement& b);
ZTensorElement zt_mul(const ZTensorElement& a, const ZTensorElement& b);

/// Change of basis: a z-word of length k becomes (-1)^k times one normal-form
/// monomial ending in an e1 block.
DRElement zword_to_dr(const ZWordElement& z, int n);

/// Inverse on the image; throws std::domain_error("not in W^dR") when some
/// monomial has a trailing e0 power or group element.
ZWordElement dr_to_zword(const DRElement& d);

/// Harmonic coproduct, defined on a generator z_{n,zeta^a} as
///   z (x) 1 + 1 (x) z + sum_{k=1}^{n-1} sum_b z_{k,zeta^b} (x) z_{n-k,zeta^{a-b}},
/// extended as an algebra morphism over concatenation.
ZTensorElement harmonic_coproduct(const ZWordElement& z, int n);

}  // namespace muharm
