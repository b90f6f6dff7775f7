#include <muharm/laurent.hpp>

#include <algorithm>
#include <map>

namespace muharm {

LaurentPoly2 LaurentPoly2::in_x(const LaurentPoly& p) {
    LaurentPoly2 r;
    for (const auto& [e, c] : p.terms()) r.terms_.add({e, 0}, c);
    return r;
}

LaurentPoly2 LaurentPoly2::in_y(const LaurentPoly& p) {
    LaurentPoly2 r;
    for (const auto& [e, c] : p.terms()) r.terms_.add({0, e}, c);
    return r;
}

LaurentPoly2 divide_by_x_minus_y(const LaurentPoly2& f) {
    if (f.is_zero()) return {};

    // Shift so every X exponent is >= 0; X is a unit, so the quotient shifts back.
    long min_x = 0;
    for (const auto& [e, c] : f.terms()) min_x = std::min(min_x, e.first);
    const long shift = -min_x;

    // View as a polynomial in X with Laurent coefficients in Y.
    std::map<long, LaurentPoly> coeff;
    long deg = 0;
    for (const auto& [e, c] : f.terms()) {
        coeff[e.first + shift].add_term(e.second, c);
        deg = std::max(deg, e.first + shift);
    }

    // Synthetic division by the monic (X - Y): q_{d-1} = c_d, q_{i-1} = c_i + Y q_i.
    std::map<long, LaurentPoly> quot;
    LaurentPoly carry;  // q_i while walking i = d-1 .. 0
    const LaurentPoly y = LaurentPoly::monomial(1);
    for (long i = deg; i >= 1; --i) {
        LaurentPoly ci = coeff.count(i) ? coeff[i] : LaurentPoly();
        LaurentPoly qi = (i == deg) ? ci : ci + y * carry;
        if (!qi.is_zero()) quot[i - 1] = qi;
        carry = qi;
    }
    LaurentPoly c0 = coeff.count(0) ? coeff[0] : LaurentPoly();
    LaurentPoly remainder = c0 + y * carry;
    if (!remainder.is_zero()) throw std::domain_error("divide_by_x_minus_y: not divisible");

    LaurentPoly2 out;
    for (const auto& [i, ci] : quot)
        for (const auto& [ey, c] : ci.terms()) out.add_term(i - shift, ey, c);
    return out;
}

LaurentPoly2 divided_difference(const LaurentPoly& p, const LaurentPoly& q, int m, int N) {
    const LaurentPoly xn1 = LaurentPoly::monomial(N) - LaurentPoly(1);  // X^N - 1
    const LaurentPoly2 lead_x = LaurentPoly2::in_x(xn1.pow(m - 1) * p) * LaurentPoly2::monomial(0, 1);
    const LaurentPoly2 lead_y = LaurentPoly2::in_y(xn1.pow(m - 1) * q) * LaurentPoly2::monomial(1, 0);
    return divide_by_x_minus_y(lead_x - lead_y);
}

GroupAlgebraElement laurent_to_x0(const LaurentPoly& p) {
    GroupAlgebraElement v;
    for (const auto& [e, c] : p.terms()) v.add_term(ReducedWord::power(Letter::X0, e), c);
    return v;
}

}  // namespace muharm
