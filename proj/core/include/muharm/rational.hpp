#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace muharm {

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
/// All arithmetic in this library is exact; there is no floating point anywhere.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}     // NOLINT: implicit by design
    Rational(int n) : q_(n) {}      // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    static Rational from_string(const std::string& s) {
        Rational r;
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        r.q_ = mpq_class(s);
        if (r.q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        r.q_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }

    /// "p" or "p/q", canonical.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k!.
/// Exact for any rational a; for integer a it is the usual (possibly signed) binomial.
inline Rational binomial(const Rational& a, int k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    Rational x = a;
    for (int i = 0; i < k; ++i) {
        num *= x;
        x -= Rational(1);
    }
    Rational fact(1);
    for (int i = 2; i <= k; ++i) fact *= Rational(i);
    return num / fact;
}

}  // namespace muharm
