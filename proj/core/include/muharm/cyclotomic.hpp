#pragma once

#include <map>
#include <vector>

#include "muharm/group_algebra.hpp"
#include "muharm/sparse.hpp"
#include "muharm/valuation.hpp"

namespace muharm {

/// Element of the group algebra Q[Z/N], coefficients indexed by residue.
class MuNElement {
public:
    explicit MuNElement(int n) : n_(n) {}
    MuNElement(int n, const Rational& c) : n_(n) { coeffs_.add(0, c); }

    int modulus() const { return n_; }

    static MuNElement generator_power(int n, long k);

    void add_term(long residue, const Rational& c) { coeffs_.add(norm(residue), c); }
    Rational coefficient(long residue) const { return coeffs_.coefficient(norm(residue)); }

    bool is_zero() const { return coeffs_.is_zero(); }

    MuNElement& operator+=(const MuNElement& o);
    MuNElement& operator-=(const MuNElement& o);
    friend MuNElement operator+(MuNElement a, const MuNElement& b) { return a += b; }
    friend MuNElement operator-(MuNElement a, const MuNElement& b) { return a -= b; }
    friend MuNElement operator*(const MuNElement& a, const MuNElement& b);
    MuNElement& operator*=(const Rational& c) { coeffs_ *= c; return *this; }

    friend bool operator==(const MuNElement& a, const MuNElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    const SparseMap<long>& terms() const { return coeffs_; }

private:
    long norm(long r) const { return ((r % n_) + n_) % n_; }
    int n_;
    SparseMap<long> coeffs_;
};

/// Algebra morphism pi_N : Q[F2] -> Q[Z/N] sending X0 to the generator and
/// X1 to 1. Its kernel is the ideal defining the filtration.
MuNElement project_to_muN(const GroupAlgebraElement& v, int n);

/// Letters of the free kernel subgroup: index 0 is g = X0^N, index 1+a is
/// h_a = X0^a X1 X0^-a for a in [0, N).
struct KernelSyllable {
    int letter;       // 0 => g, 1+a => h_a
    long exponent;    // nonzero

    friend bool operator==(const KernelSyllable&, const KernelSyllable&) = default;
    friend auto operator<=>(const KernelSyllable&, const KernelSyllable&) = default;
};

/// Reduced word in the free group on {g, h_0, ..., h_{N-1}}.
class KernelWord {
public:
    KernelWord() = default;
    static KernelWord reduce(const std::vector<KernelSyllable>& sylls);

    bool is_identity() const { return sylls_.empty(); }
    const std::vector<KernelSyllable>& syllables() const { return sylls_; }
    long letter_length() const;

    void append_run(int letter, long exponent);

    friend bool operator==(const KernelWord&, const KernelWord&) = default;
    friend auto operator<=>(const KernelWord& a, const KernelWord& b) {
        if (auto c = a.letter_length() <=> b.letter_length(); c != 0) return c;
        return a.sylls_ <=> b.sylls_;
    }

private:
    std::vector<KernelSyllable> sylls_;
};

/// Element of the group algebra of the kernel subgroup.
using KernelAlgebraElement = SparseMap<KernelWord>;

/// Decomposition of v in Q[F2] along the Schreier transversal {X0^a}:
/// v = sum_a components[a] * X0^a with each component supported on kernel
/// words.
struct CosetDecomposition {
    int n;
    std::vector<KernelAlgebraElement> components;  // size n
};

/// Rewrite every word of v through the Schreier transversal for the kernel
/// of pi_N. Exact; inverts via kernel_word_to_f2.
CosetDecomposition coset_decompose(const GroupAlgebraElement& v, int n);

/// Expand a kernel word back into F2 letters.
ReducedWord kernel_word_to_f2(const KernelWord& w, int n);

GroupAlgebraElement coset_recompose(const CosetDecomposition& d);

/// Truncated series in the free associative algebra on N+1 letters u_0..u_N
/// (the Magnus targets of g - 1 and h_a - 1), keeping words of length <= M.
class FreeTruncatedSeries {
public:
    using Word = std::vector<int>;  // letter indices

    explicit FreeTruncatedSeries(int max_len) : max_len_(max_len) {}

    static FreeTruncatedSeries constant(int max_len, const Rational& c);
    static FreeTruncatedSeries letter(int max_len, int idx);

    int max_len() const { return max_len_; }
    bool is_zero() const { return terms_.is_zero(); }

    void add_term(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const { return terms_.coefficient(w); }

    FreeTruncatedSeries& operator+=(const FreeTruncatedSeries& o);
    FreeTruncatedSeries& operator-=(const FreeTruncatedSeries& o);
    friend FreeTruncatedSeries operator+(FreeTruncatedSeries a, const FreeTruncatedSeries& b) { return a += b; }
    friend FreeTruncatedSeries operator-(FreeTruncatedSeries a, const FreeTruncatedSeries& b) { return a -= b; }
    friend FreeTruncatedSeries operator*(const FreeTruncatedSeries& a, const FreeTruncatedSeries& b);
    FreeTruncatedSeries& operator*=(const Rational& c) { terms_ *= c; return *this; }

    /// (1 + u_idx)^e truncated; negative e uses the geometric-series inverse.
    static FreeTruncatedSeries letter_power(int max_len, int idx, long e);

    /// Smallest word length with a surviving coefficient; -1 if zero.
    int min_degree() const;

    friend bool operator==(const FreeTruncatedSeries&, const FreeTruncatedSeries&) = default;

private:
    int max_len_;
    SparseMap<Word> terms_;
};

/// Filtration degree via the Schreier route: decompose along cosets, Magnus-
/// expand each kernel component, take the componentwise minimum valuation.
/// Exact for values <= max_len; otherwise reports the lower bound.
FiltrationDegree oracle_filtration_degree(const GroupAlgebraElement& v, int n, int max_len);

}  // namespace muharm
