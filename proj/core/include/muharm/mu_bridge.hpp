#pragma once

#include <map>
#include <utility>
#include <vector>

#include "muharm/derham.hpp"
#include "muharm/group_algebra.hpp"
#include "muharm/valuation.hpp"

namespace muharm {

/// Degree-truncated element of the completed graded algebra: one homogeneous
/// component per degree 0..trunc, everything above silently dropped.
class TruncatedDRSeries {
public:
    TruncatedDRSeries(int n, int trunc);
    static TruncatedDRSeries one(int n, int trunc);

    int modulus() const { return n_; }
    int truncation() const { return trunc_; }

    const DRElement& component(int d) const { return comps_[d]; }
    void add_monomial(DRMonomial m, const Rational& c);

    TruncatedDRSeries& operator+=(const TruncatedDRSeries& o);
    TruncatedDRSeries& operator-=(const TruncatedDRSeries& o);
    TruncatedDRSeries& operator*=(const Rational& c);
    friend TruncatedDRSeries operator+(TruncatedDRSeries a, const TruncatedDRSeries& b) { return a += b; }
    friend TruncatedDRSeries operator-(TruncatedDRSeries a, const TruncatedDRSeries& b) { return a -= b; }
    friend TruncatedDRSeries operator*(const TruncatedDRSeries& a, const TruncatedDRSeries& b);

    bool is_zero() const;
    /// Smallest degree with a nonzero component; -1 when zero through trunc.
    int min_degree() const;

    friend bool operator==(const TruncatedDRSeries&, const TruncatedDRSeries&) = default;

private:
    int n_, trunc_;
    std::vector<DRElement> comps_;
};

/// Sparse element of the tensor square of the graded algebra.
class DRTensorElement {
public:
    explicit DRTensorElement(int n) : n_(n) {}

    int modulus() const { return n_; }
    bool is_zero() const { return terms_.is_zero(); }

    void add_term(DRMonomial a, DRMonomial b, const Rational& c);

    DRTensorElement& operator+=(const DRTensorElement& o);
    DRTensorElement& operator-=(const DRTensorElement& o);
    DRTensorElement& operator*=(const Rational& c) { terms_ *= c; return *this; }

    friend bool operator==(const DRTensorElement& a, const DRTensorElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    const SparseMap<std::pair<DRMonomial, DRMonomial>>& terms() const { return terms_; }

private:
    int n_;
    SparseMap<std::pair<DRMonomial, DRMonomial>> terms_;
};

/// Tensor-square series graded by total degree.
struct TruncatedDRTensor {
    int n;
    int trunc;
    std::vector<DRTensorElement> comps;  // indexed by total degree

    int min_degree() const;
};

/// The expansion morphism into the truncated completion, determined by
///   X1^j  -> sum_k C(j,k) e1^k
///   X0^j  -> zeta^j * sum_k C(j/N,k) e0^k
/// (generalized binomial coefficients, exact over Q). In particular
/// X0^N - 1 -> e0 and X1 - 1 -> e1 on the nose. Per-word results are cached.
class MuExpander {
public:
    MuExpander(int n, int trunc) : n_(n), trunc_(trunc) {}

    int modulus() const { return n_; }
    int truncation() const { return trunc_; }

    const TruncatedDRSeries& expand_word(const ReducedWord& w);
    TruncatedDRSeries expand(const GroupAlgebraElement& v);

    FiltrationDegree filtration_degree(const GroupAlgebraElement& v);
    /// Lowest surviving homogeneous slice; throws std::domain_error
    /// ("valuation exceeds truncation") when nothing survives.
    std::pair<int, DRElement> leading_term(const GroupAlgebraElement& v);

    TruncatedDRTensor expand_tensor(const TensorElement& t);
    FiltrationDegree tensor_filtration_degree(const TensorElement& t);
    std::pair<int, DRTensorElement> tensor_leading_term(const TensorElement& t);

private:
    TruncatedDRSeries expand_run(Letter l, long e) const;

    int n_, trunc_;
    std::map<ReducedWord, TruncatedDRSeries> cache_;
};

TruncatedDRSeries mu_expand(const GroupAlgebraElement& v, int n, int trunc);
FiltrationDegree filtration_degree(const GroupAlgebraElement& v, int n, int trunc);
std::pair<int, DRElement> leading_term(const GroupAlgebraElement& v, int n, int trunc);
FiltrationDegree tensor_filtration_degree(const TensorElement& t, int n, int trunc);
std::pair<int, DRTensorElement> tensor_leading_term(const TensorElement& t, int n, int trunc);

/// Monomial-wise substitution zeta -> X0, e0 -> X0^N - 1, e1 -> X1 - 1.
/// On a homogeneous input of degree m, leading_term returns (m, input) back.
GroupAlgebraElement rho_lift(const DRElement& d);

/// Slotwise change of basis from z-word tensors into the tensor square.
DRTensorElement zt_to_dr_tensor(const ZTensorElement& z, int n);

}  // namespace muharm
