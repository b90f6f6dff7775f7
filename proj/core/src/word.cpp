#include <muharm/word.hpp>

namespace muharm {

void ReducedWord::append_run(Letter l, long e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().letter == l) {
        syl_.back().exponent += e;
        if (syl_.back().exponent == 0) syl_.pop_back();
        return;
    }
    syl_.push_back({l, e});
}

ReducedWord ReducedWord::reduce(std::span<const Syllable> raw) {
    ReducedWord w;
    for (const Syllable& s : raw) w.append_run(s.letter, s.exponent);
    return w;
}

ReducedWord ReducedWord::power(Letter l, long e) {
    ReducedWord w;
    w.append_run(l, e);
    return w;
}

long ReducedWord::letter_length() const {
    long n = 0;
    for (const Syllable& s : syl_) n += s.exponent < 0 ? -s.exponent : s.exponent;
    return n;
}

ReducedWord ReducedWord::inverse() const {
    ReducedWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
        w.syl_.push_back({it->letter, -it->exponent});
    return w;
}

ReducedWord operator*(const ReducedWord& a, const ReducedWord& b) {
    ReducedWord w = a;
    for (const Syllable& s : b.syl_) w.append_run(s.letter, s.exponent);
    return w;
}

std::pair<ReducedWord, long> ReducedWord::split_trailing(Letter l) const {
    if (syl_.empty() || syl_.back().letter != l) return {*this, 0};
    ReducedWord prefix = *this;
    const long e = prefix.syl_.back().exponent;
    prefix.syl_.pop_back();
    return {prefix, e};
}

long ReducedWord::x0_degree() const {
    long d = 0;
    for (const Syllable& s : syl_)
        if (s.letter == Letter::X0) d += s.exponent;
    return d;
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.letter_length() <=> b.letter_length(); c != 0) return c;
    if (auto c = a.syl_.size() <=> b.syl_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.syl_.size(); ++i)
        if (auto c = a.syl_[i] <=> b.syl_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace muharm
