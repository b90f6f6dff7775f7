#include <muharm/group_algebra.hpp>

namespace muharm {

GroupAlgebraElement GroupAlgebraElement::pow(int k) const {
    GroupAlgebraElement r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::map<ReducedWord, GroupAlgebraElement> TensorElement::right_fibers() const {
    std::map<ReducedWord, GroupAlgebraElement> fibers;
    for (const auto& [p, c] : terms_) fibers[p.second].add_term(p.first, c);
    return fibers;
}

std::map<ReducedWord, GroupAlgebraElement> TensorElement::left_fibers() const {
    std::map<ReducedWord, GroupAlgebraElement> fibers;
    for (const auto& [p, c] : terms_) fibers[p.first].add_term(p.second, c);
    return fibers;
}

}  // namespace muharm
