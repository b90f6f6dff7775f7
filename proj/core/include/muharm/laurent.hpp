#pragma once

#include <muharm/group_algebra.hpp>
#include <muharm/sparse.hpp>

#include <stdexcept>
#include <utility>

namespace muharm {

/// Laurent polynomial in one commuting variable, exponents in Z.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { terms_.add(0, c); }  // NOLINT
    LaurentPoly(long c) { terms_.add(0, Rational(c)); }   // NOLINT

    static LaurentPoly monomial(long e, const Rational& c = Rational(1)) {
        LaurentPoly p;
        p.terms_.add(e, c);
        return p;
    }

    bool is_zero() const { return terms_.is_zero(); }
    const SparseMap<long>& terms() const { return terms_; }
    void add_term(long e, const Rational& c) { terms_.add(e, c); }

    LaurentPoly& operator+=(const LaurentPoly& o) { terms_ += o.terms_; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { terms_ -= o.terms_; return *this; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_ = convolve(a.terms_, b.terms_, [](long x, long y) { return std::optional(x + y); });
        return r;
    }

    LaurentPoly pow(int k) const {
        LaurentPoly r(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    SparseMap<long> terms_;
};

/// Laurent polynomial in two commuting variables X, Y.
class LaurentPoly2 {
public:
    using Exp = std::pair<long, long>;  // (X exponent, Y exponent)

    LaurentPoly2() = default;

    static LaurentPoly2 monomial(long ex, long ey, const Rational& c = Rational(1)) {
        LaurentPoly2 p;
        p.terms_.add({ex, ey}, c);
        return p;
    }
    /// Embeds a one-variable polynomial into the X (resp. Y) slot.
    static LaurentPoly2 in_x(const LaurentPoly& p);
    static LaurentPoly2 in_y(const LaurentPoly& p);

    bool is_zero() const { return terms_.is_zero(); }
    const SparseMap<Exp>& terms() const { return terms_; }
    void add_term(long ex, long ey, const Rational& c) { terms_.add({ex, ey}, c); }

    LaurentPoly2& operator+=(const LaurentPoly2& o) { terms_ += o.terms_; return *this; }
    LaurentPoly2& operator-=(const LaurentPoly2& o) { terms_ -= o.terms_; return *this; }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        r.terms_ = convolve(a.terms_, b.terms_, [](const Exp& x, const Exp& y) {
            return std::optional(Exp{x.first + y.first, x.second + y.second});
        });
        return r;
    }

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

private:
    SparseMap<Exp> terms_;
};

/// Exact quotient of a two-variable Laurent polynomial by (X - Y).
/// Throws std::domain_error when the division leaves a remainder.
LaurentPoly2 divide_by_x_minus_y(const LaurentPoly2& f);

/// The divided-difference polynomial F(X, Y) with
///   (X - Y) F = (X^N - 1)^(m-1) P(X) Y - (Y^N - 1)^(m-1) Q(Y) X.
/// Always divisible when P == Q; otherwise throws std::domain_error.
LaurentPoly2 divided_difference(const LaurentPoly& p, const LaurentPoly& q, int m, int N);

/// Substitution X -> X0 into the group algebra.
GroupAlgebraElement laurent_to_x0(const LaurentPoly& p);

}  // namespace muharm
