#pragma once

#include <muharm/rational.hpp>

#include <map>
#include <optional>
#include <utility>

namespace muharm {

/// Sparse linear combination over the rationals: map Key -> Rational with no
/// zero coefficients ever stored. std::map keeps iteration order deterministic,
/// which printing, hashing-free equality and report byte-stability rely on.
template <class Key>
class SparseMap {
public:
    using Map = std::map<Key, Rational>;
    using const_iterator = typename Map::const_iterator;

    SparseMap() = default;

    void add(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparseMap& operator+=(const SparseMap& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SparseMap& operator-=(const SparseMap& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    SparseMap& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    friend bool operator==(const SparseMap& a, const SparseMap& b) {
        return a.terms_ == b.terms_;
    }

private:
    Map terms_;
};

/// Bilinear convolution product. KeyMul(k1, k2) returns the product key, or
/// std::nullopt when the term is to be dropped (truncation).
template <class Key, class KeyMul>
SparseMap<Key> convolve(const SparseMap<Key>& a, const SparseMap<Key>& b, KeyMul&& mul) {
    SparseMap<Key> out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            std::optional<Key> k = mul(ka, kb);
            if (k) out.add(*k, ca * cb);
        }
    }
    return out;
}

}  // namespace muharm
