#pragma once

#include <compare>
#include <string>

namespace muharm {

/// Result of a filtration-degree query against a truncated expansion.
/// Either an exact value d in [0, M], or the lower bound ">= M+1" when the
/// element vanished through the whole truncation window. Bounds are never
/// silently clamped to the window.
class FiltrationDegree {
public:
    static FiltrationDegree exact(int d) { return FiltrationDegree(d, true); }
    static FiltrationDegree at_least(int d) { return FiltrationDegree(d, false); }

    bool is_exact() const { return exact_; }
    /// Exact value, or the guaranteed lower bound.
    int value() const { return value_; }

    /// True when the element provably lies in filtration step m.
    bool admits(int m) const { return value_ >= m; }

    std::string str() const {
        return exact_ ? std::to_string(value_) : ">=" + std::to_string(value_);
    }

    friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;

private:
    FiltrationDegree(int v, bool e) : value_(v), exact_(e) {}
    int value_;
    bool exact_;
};

}  // namespace muharm
