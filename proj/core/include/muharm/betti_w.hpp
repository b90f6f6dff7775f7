#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "muharm/group_algebra.hpp"
#include "muharm/laurent.hpp"
#include "muharm/rng.hpp"
#include "muharm/sparse.hpp"

namespace muharm {

/// Abstract generator letter: T (= X1^-1) or G_n (= X0^n (X1-1)).
struct GenLetter {
    bool is_T;
    long n;  // meaningful only for G letters

    static GenLetter T() { return {true, 0}; }
    static GenLetter G(long n) { return {false, n}; }

    friend bool operator==(const GenLetter&, const GenLetter&) = default;
    friend auto operator<=>(const GenLetter&, const GenLetter&) = default;
};

using GenWord = std::vector<GenLetter>;

/// Noncommutative polynomial in the abstract generators; witnesses of a
/// W-element's presentation. Product = concatenation.
using GeneratorPoly = SparseMap<GenWord>;

GeneratorPoly gp_one();
GeneratorPoly gp_letter(GenLetter l);
GeneratorPoly gp_mul(const GeneratorPoly& a, const GeneratorPoly& b);

/// Substitution homomorphism T -> X1^-1, G_n -> X0^n (X1-1).
GroupAlgebraElement evaluate_generators(const GeneratorPoly& p);

/// Membership in W = K + V (X1-1), decided by summing coefficients over
/// classes of words modulo trailing X1-powers: the element lies in W iff
/// every non-identity class sums to zero; the identity class sum is the
/// constant part, returned on success.
std::optional<Rational> is_in_W(const GroupAlgebraElement& v);

/// Unique q with q * (X1-1) = v, for v with every class sum zero.
GroupAlgebraElement right_divide_by_x1m1(const GroupAlgebraElement& v);

/// Present a W-element in the abstract generators. The round-trip
/// evaluate_generators(decompose_in_generators(v)) == v is the contract;
/// the particular presentation is not canonical. Throws std::domain_error
/// when v is not in W.
GeneratorPoly decompose_in_generators(const GroupAlgebraElement& v);

/// Signed interval sum: f(p)+...+f(q) when q >= p, zero when q = p-1, and
/// -f(q+1)-...-f(p-1) when q < p-1. A needs += and -=.
template <class A, class F>
A signed_range_sum(F&& f, long p, long q, A zero) {
    A acc = std::move(zero);
    if (q >= p) {
        for (long k = p; k <= q; ++k) acc += f(k);
    } else if (q < p - 1) {
        for (long k = q + 1; k <= p - 1; ++k) acc -= f(k);
    }
    return acc;
}

/// Coproduct images of the generators, multiplied out in the tensor square:
///   T   ->  T (x) T
///   G_n ->  G_n (x) 1 + 1 (x) G_n
///           - signed sum over 0 < k < n of X0^k(X1-1) (x) X0^{n-k}(X1-1).
TensorElement coproduct_of_generators(const GeneratorPoly& p);

/// The coproduct on W, via decomposition into generators. Independence from
/// the chosen decomposition is exercised by tests, not assumed.
TensorElement coproduct(const GroupAlgebraElement& v);

/// Closed form of coproduct((X0^N-1)^{m-1} P(X0) (X1-1)): the two one-sided
/// terms minus the divided-difference kernel paired against
/// (X1-1) (x) (X1-1).
TensorElement coproduct_closed_form(int m, const LaurentPoly& P, int n);

/// Augmentation; the kernel of it inside W is the first filtration step.
Rational counit(const GroupAlgebraElement& v);

/// Conjugates coproduct(v) slotwise by X1^a (x) X1^b.
TensorElement twisted_coproduct(long a, long b, const GroupAlgebraElement& v);

/// Evaluation-preserving random rewriting of a presentation (T <-> 1 - T G_0
/// and insertions of T + T G_0 = 1). Used to cross-check that coproduct output
/// does not depend on the presentation.
GeneratorPoly randomize_decomposition(const GeneratorPoly& p, SeededRng& rng, int rounds);

}  // namespace muharm
