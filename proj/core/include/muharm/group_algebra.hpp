#pragma once

#include <muharm/sparse.hpp>
#include <muharm/word.hpp>

#include <tuple>
#include <utility>

namespace muharm {

/// Element of the rational group algebra of the free group on X0, X1:
/// a sparse combination of reduced words. The ambient algebra of everything
/// on the Betti side.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    GroupAlgebraElement(const Rational& c) { terms_.add(ReducedWord(), c); }  // NOLINT
    GroupAlgebraElement(long c) { terms_.add(ReducedWord(), Rational(c)); }  // NOLINT

    static GroupAlgebraElement word(const ReducedWord& w, const Rational& c = Rational(1)) {
        GroupAlgebraElement v;
        v.terms_.add(w, c);
        return v;
    }

    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const ReducedWord& w) const { return terms_.coefficient(w); }
    const SparseMap<ReducedWord>& terms() const { return terms_; }

    void add_term(const ReducedWord& w, const Rational& c) { terms_.add(w, c); }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) { terms_ += o.terms_; return *this; }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) { terms_ -= o.terms_; return *this; }
    GroupAlgebraElement& operator*=(const Rational& s) { terms_ *= s; return *this; }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
    friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }
    GroupAlgebraElement operator-() const { GroupAlgebraElement r = *this; r.terms_ *= Rational(-1); return r; }

    /// Bilinear product: word concatenation followed by free reduction.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement r;
        r.terms_ = convolve(a.terms_, b.terms_,
                            [](const ReducedWord& x, const ReducedWord& y) { return std::optional(x * y); });
        return r;
    }

    GroupAlgebraElement pow(int k) const;

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    SparseMap<ReducedWord> terms_;
};

/// X0^e, X1^e as elements.
inline GroupAlgebraElement x0_pow(long e) { return GroupAlgebraElement::word(ReducedWord::power(Letter::X0, e)); }
inline GroupAlgebraElement x1_pow(long e) { return GroupAlgebraElement::word(ReducedWord::power(Letter::X1, e)); }

using WordPair = std::pair<ReducedWord, ReducedWord>;

/// Element of the tensor square of the group algebra: sparse combination of
/// pairs of reduced words, multiplied slotwise.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(const Rational& c) { terms_.add(WordPair(), c); }  // NOLINT

    static TensorElement pure(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        TensorElement t;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) t.terms_.add({wa, wb}, ca * cb);
        return t;
    }

    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }
    const SparseMap<WordPair>& terms() const { return terms_; }
    void add_term(const WordPair& p, const Rational& c) { terms_.add(p, c); }

    TensorElement& operator+=(const TensorElement& o) { terms_ += o.terms_; return *this; }
    TensorElement& operator-=(const TensorElement& o) { terms_ -= o.terms_; return *this; }
    TensorElement& operator*=(const Rational& s) { terms_ *= s; return *this; }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement r;
        r.terms_ = convolve(a.terms_, b.terms_, [](const WordPair& x, const WordPair& y) {
            return std::optional(WordPair{x.first * y.first, x.second * y.second});
        });
        return r;
    }

    /// Groups terms by right word: t = sum_w fiber(w) (x) w. Membership of t in
    /// W (x) V makes every fiber a W-element; verifiers rely on this to apply
    /// slotwise maps.
    std::map<ReducedWord, GroupAlgebraElement> right_fibers() const;
    std::map<ReducedWord, GroupAlgebraElement> left_fibers() const;

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    SparseMap<WordPair> terms_;
};

/// Triple tensors, only ever built by the coassociativity checks.
using Tensor3Element = SparseMap<std::tuple<ReducedWord, ReducedWord, ReducedWord>>;

}  // namespace muharm
