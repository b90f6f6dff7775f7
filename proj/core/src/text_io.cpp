#include "muharm/text_io.hpp"

#include <cctype>
#include <vector>

namespace muharm {

// --- printers -------------------------------------------------------------

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const ReducedWord& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += "*";
        out += s.letter == Letter::X0 ? "X0" : "X1";
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

namespace {

// Sum printer shared by every element type: pieces are (body, coefficient)
// with body "1" for the unit basis element. Terms arrive in ascending key
// order; we print leading term first, so iterate back to front.
std::string print_sum(const std::vector<std::pair<std::string, Rational>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        const auto& [body, coef] = *it;
        Rational a = coef.abs();
        bool neg = coef.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (body == "1") {
            out += a.str();
        } else if (a.is_one()) {
            out += body;
        } else {
            out += a.str() + "*" + body;
        }
    }
    return out;
}

}  // namespace

std::string to_string(const GroupAlgebraElement& v) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [w, c] : v.terms()) pieces.emplace_back(to_string(w), c);
    return print_sum(pieces);
}

std::string to_string(const TensorElement& t) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [p, c] : t.terms())
        pieces.emplace_back("(" + to_string(p.first) + ")@(" + to_string(p.second) + ")", c);
    return print_sum(pieces);
}

std::string to_string(const GenWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += " ";
        out += l.is_T ? "T" : "G[" + std::to_string(l.n) + "]";
    }
    return out;
}

std::string to_string(const GeneratorPoly& p) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [w, c] : p) pieces.emplace_back(to_string(w), c);
    return print_sum(pieces);
}

std::string to_string(const ZWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w)
        out += "z[" + std::to_string(l.n) + "," + std::to_string(l.zeta) + "]";
    return out;
}

std::string to_string(const ZWordElement& z) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [w, c] : z) pieces.emplace_back(to_string(w), c);
    return print_sum(pieces);
}

std::string to_string(const ZTensorElement& z) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [p, c] : z)
        pieces.emplace_back("(" + to_string(p.first) + ")@(" + to_string(p.second) + ")", c);
    return print_sum(pieces);
}

std::string to_string(const DRMonomial& m) {
    std::vector<std::string> parts;
    if (m.a0 > 0) parts.push_back(m.a0 == 1 ? "e0" : "e0^" + std::to_string(m.a0));
    for (const auto& b : m.blocks) {
        if (b.zeta != 0) parts.push_back("w[" + std::to_string(b.zeta) + "]");
        parts.push_back("e1");
        if (b.e0 > 0) parts.push_back(b.e0 == 1 ? "e0" : "e0^" + std::to_string(b.e0));
    }
    if (m.eta != 0) parts.push_back("w[" + std::to_string(m.eta) + "]");
    if (parts.empty()) return "1";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

std::string to_string(const DRElement& d) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [m, c] : d.terms()) pieces.emplace_back(to_string(m), c);
    return print_sum(pieces);
}

std::string to_string(const DRTensorElement& t) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [p, c] : t.terms())
        pieces.emplace_back("(" + to_string(p.first) + ")@(" + to_string(p.second) + ")", c);
    return print_sum(pieces);
}

std::string to_string(const FiltrationDegree& d) { return d.str(); }

std::string to_string(const LaurentPoly& p) {
    std::vector<std::pair<std::string, Rational>> pieces;
    for (const auto& [e, c] : p.terms()) {
        std::string body = e == 0 ? "1" : e == 1 ? "X0" : "X0^" + std::to_string(e);
        pieces.emplace_back(body, c);
    }
    return print_sum(pieces);
}

// --- lexer ----------------------------------------------------------------

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Slash, Caret, LBrack, RBrack, LParen, RParen, At, Comma };

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    Tok tok() const { return tok_; }
    long int_value() const { return int_; }
    const std::string& ident() const { return ident_; }
    size_t pos() const { return tok_start_; }

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_start_ = i_;
        if (i_ >= s_.size()) {
            tok_ = Tok::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                v = v * 10 + (s_[i_++] - '0');
            tok_ = Tok::Int;
            int_ = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // names are one letter plus trailing digits (X0, e1, z, w, T, G),
            // so juxtapositions like "e1e0" split correctly
            ident_.assign(1, c);
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ident_ += s_[i_++];
            tok_ = Tok::Ident;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = Tok::Plus; return;
            case '-': tok_ = Tok::Minus; return;
            case '*': tok_ = Tok::Star; return;
            case '/': tok_ = Tok::Slash; return;
            case '^': tok_ = Tok::Caret; return;
            case '[': tok_ = Tok::LBrack; return;
            case ']': tok_ = Tok::RBrack; return;
            case '(': tok_ = Tok::LParen; return;
            case ')': tok_ = Tok::RParen; return;
            case '@': tok_ = Tok::At; return;
            case ',': tok_ = Tok::Comma; return;
        }
        fail("unexpected character");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(tok_start_));
    }

    void expect(Tok t, const char* what) {
        if (tok_ != t) fail(std::string("expected ") + what);
        advance();
    }

    /// Optionally signed integer (exponents, bracket arguments).
    long signed_int() {
        bool neg = false;
        if (tok_ == Tok::Minus) {
            neg = true;
            advance();
        } else if (tok_ == Tok::Plus) {
            advance();
        }
        if (tok_ != Tok::Int) fail("expected integer");
        long v = int_;
        advance();
        return neg ? -v : v;
    }

private:
    std::string_view s_;
    size_t i_ = 0, tok_start_ = 0;
    Tok tok_ = Tok::End;
    long int_ = 0;
    std::string ident_;
};

void add_unit(GroupAlgebraElement& e, const Rational& c) { e.add_term(ReducedWord(), c); }
void add_unit(TensorElement& e, const Rational& c) { e.add_term(WordPair(), c); }
void add_unit(ZWordElement& e, const Rational& c) { e.add({}, c); }
void add_unit(ZTensorElement& e, const Rational& c) { e.add({}, c); }
void add_unit(GeneratorPoly& e, const Rational& c) { e.add({}, c); }

// Every element grammar is a signed sum of terms, each an optional rational
// coefficient followed by an optional basis word. TermParser supplies the
// word parsing; it returns false when the lookahead cannot start a word.
template <class Elem, class TermParser>
Elem parse_sum(Lexer& lx, TermParser&& parse_word, bool toplevel = true) {
    Elem out{};
    bool any = false;
    int sign = 1;
    if (lx.tok() == Tok::Minus) {
        sign = -1;
        lx.advance();
    } else if (lx.tok() == Tok::Plus) {
        lx.advance();
    }
    for (;;) {
        // one term
        Rational coef(sign);
        bool have_coef = false;
        if (lx.tok() == Tok::Int) {
            long num = lx.int_value();
            lx.advance();
            long den = 1;
            if (lx.tok() == Tok::Slash) {
                lx.advance();
                if (lx.tok() != Tok::Int) lx.fail("expected denominator");
                den = lx.int_value();
                lx.advance();
            }
            coef = Rational(sign * num, den);
            have_coef = true;
            if (lx.tok() == Tok::Star) lx.advance();
        }
        Elem term{};
        if (!parse_word(term, coef)) {
            if (!have_coef) lx.fail("expected term");
            // pure scalar: parse_word is responsible for having added
            // nothing; add the unit here
            term = Elem{};
            add_unit(term, coef);
        }
        out += term;
        any = true;
        if (lx.tok() == Tok::Plus) {
            sign = 1;
            lx.advance();
        } else if (lx.tok() == Tok::Minus) {
            sign = -1;
            lx.advance();
        } else {
            break;
        }
    }
    if (toplevel && lx.tok() != Tok::End) lx.fail("trailing input");
    if (!any) lx.fail("empty expression");
    return out;
}

// The group algebra grammar is a full expression grammar: sums of products
// of factors, where a factor is a generator run, a rational, or a
// parenthesized subexpression with an optional nonnegative power. This is
// what lets the command line take inputs like "(X0^2 - 1)^2*(X1 - 1)".
GroupAlgebraElement parse_group_sum(Lexer& lx, bool toplevel);

bool parse_group_factor(Lexer& lx, GroupAlgebraElement& out) {
    if (lx.tok() == Tok::LParen) {
        lx.advance();
        GroupAlgebraElement inner = parse_group_sum(lx, false);
        lx.expect(Tok::RParen, ")");
        if (lx.tok() == Tok::Caret) {
            lx.advance();
            long e = lx.signed_int();
            if (e < 0) lx.fail("negative power of a parenthesized sum");
            inner = inner.pow(static_cast<int>(e));
        }
        out = inner;
        return true;
    }
    if (lx.tok() == Tok::Int) {
        long num = lx.int_value();
        lx.advance();
        long den = 1;
        if (lx.tok() == Tok::Slash) {
            lx.advance();
            if (lx.tok() != Tok::Int) lx.fail("expected denominator");
            den = lx.int_value();
            lx.advance();
        }
        out = GroupAlgebraElement(Rational(num, den));
        return true;
    }
    if (lx.tok() == Tok::Ident && (lx.ident() == "X0" || lx.ident() == "X1")) {
        Letter l = lx.ident() == "X0" ? Letter::X0 : Letter::X1;
        lx.advance();
        long e = 1;
        if (lx.tok() == Tok::Caret) {
            lx.advance();
            e = lx.signed_int();
        }
        out = GroupAlgebraElement::word(ReducedWord::power(l, e));
        return true;
    }
    return false;
}

bool parse_group_product(Lexer& lx, GroupAlgebraElement& out) {
    GroupAlgebraElement acc;
    if (!parse_group_factor(lx, acc)) return false;
    for (;;) {
        GroupAlgebraElement f;
        if (lx.tok() == Tok::Star) {
            lx.advance();
            if (!parse_group_factor(lx, f)) lx.fail("expected factor");
        } else if (!parse_group_factor(lx, f)) {
            break;  // juxtaposition: "X0X1^2" multiplies successive runs
        }
        acc = acc * f;
    }
    out = std::move(acc);
    return true;
}

GroupAlgebraElement parse_group_sum(Lexer& lx, bool toplevel) {
    GroupAlgebraElement out;
    int sign = 1;
    if (lx.tok() == Tok::Minus) {
        sign = -1;
        lx.advance();
    } else if (lx.tok() == Tok::Plus) {
        lx.advance();
    }
    for (;;) {
        GroupAlgebraElement t;
        if (!parse_group_product(lx, t)) lx.fail("expected term");
        t *= Rational(sign);
        out += t;
        if (lx.tok() == Tok::Plus) {
            sign = 1;
            lx.advance();
        } else if (lx.tok() == Tok::Minus) {
            sign = -1;
            lx.advance();
        } else {
            break;
        }
    }
    if (toplevel && lx.tok() != Tok::End) lx.fail("trailing input");
    return out;
}

}  // namespace

GroupAlgebraElement parse_group_element(std::string_view s) {
    Lexer lx(s);
    return parse_group_sum(lx, true);
}

TensorElement parse_tensor_element(std::string_view s) {
    Lexer lx(s);
    return parse_sum<TensorElement>(lx, [&lx](TensorElement& term, const Rational& coef) {
        if (lx.tok() != Tok::LParen) return false;
        lx.advance();
        GroupAlgebraElement left = parse_group_sum(lx, false);
        lx.expect(Tok::RParen, ")");
        lx.expect(Tok::At, "@");
        lx.expect(Tok::LParen, "(");
        GroupAlgebraElement right = parse_group_sum(lx, false);
        lx.expect(Tok::RParen, ")");
        TensorElement pure = TensorElement::pure(left, right);
        pure *= coef;
        term += pure;
        return true;
    });
}

namespace {

bool parse_zword(Lexer& lx, int n, ZWord& w) {
    bool any = false;
    for (;;) {
        if (lx.tok() == Tok::Ident && lx.ident() == "z") {
            lx.advance();
            lx.expect(Tok::LBrack, "[");
            long depth = lx.signed_int();
            lx.expect(Tok::Comma, ",");
            long a = lx.signed_int();
            lx.expect(Tok::RBrack, "]");
            if (depth < 1) lx.fail("z index must be >= 1");
            w.push_back(ZLetter{depth, static_cast<int>(((a % n) + n) % n)});
            any = true;
        } else if (lx.tok() == Tok::Int && lx.int_value() == 1) {
            lx.advance();
            any = true;
        } else {
            break;
        }
        if (lx.tok() == Tok::Star) lx.advance();
    }
    return any;
}

}  // namespace

ZWordElement parse_zword_element(std::string_view s, int n) {
    Lexer lx(s);
    return parse_sum<ZWordElement>(lx, [&lx, n](ZWordElement& term, const Rational& coef) {
        ZWord w;
        if (!parse_zword(lx, n, w)) return false;
        term.add(w, coef);
        return true;
    });
}

ZTensorElement parse_ztensor_element(std::string_view s, int n) {
    Lexer lx(s);
    return parse_sum<ZTensorElement>(lx, [&lx, n](ZTensorElement& term, const Rational& coef) {
        if (lx.tok() != Tok::LParen) return false;
        lx.advance();
        auto inner = [&lx, n](ZWordElement& t, const Rational& c) {
            ZWord w;
            if (!parse_zword(lx, n, w)) return false;
            t.add(w, c);
            return true;
        };
        ZWordElement left = parse_sum<ZWordElement>(lx, inner, false);
        lx.expect(Tok::RParen, ")");
        lx.expect(Tok::At, "@");
        lx.expect(Tok::LParen, "(");
        ZWordElement right = parse_sum<ZWordElement>(lx, inner, false);
        lx.expect(Tok::RParen, ")");
        ZTensorElement pure = zt_pure(left, right);
        pure *= coef;
        term += pure;
        return true;
    });
}

DRElement parse_dr_element(std::string_view s, int n) {
    Lexer lx(s);
    DRElement out(n);
    bool any = false;
    int sign = 1;
    if (lx.tok() == Tok::Minus) {
        sign = -1;
        lx.advance();
    } else if (lx.tok() == Tok::Plus) {
        lx.advance();
    }
    for (;;) {
        Rational coef(sign);
        bool have_coef = false;
        if (lx.tok() == Tok::Int) {
            long num = lx.int_value();
            lx.advance();
            long den = 1;
            if (lx.tok() == Tok::Slash) {
                lx.advance();
                if (lx.tok() != Tok::Int) lx.fail("expected denominator");
                den = lx.int_value();
                lx.advance();
            }
            coef = Rational(sign * num, den);
            have_coef = true;
            if (lx.tok() == Tok::Star) lx.advance();
        }
        DRElement factor(n, coef);
        bool word = false;
        for (;;) {
            DRElement next(n);
            if (lx.tok() == Tok::Ident && (lx.ident() == "e0" || lx.ident() == "e1")) {
                bool is_e0 = lx.ident() == "e0";
                lx.advance();
                long e = 1;
                if (lx.tok() == Tok::Caret) {
                    lx.advance();
                    e = lx.signed_int();
                }
                if (e < 0) lx.fail("negative exponent on a degree-1 generator");
                next = DRElement(n, Rational(1));
                DRElement gen = is_e0 ? DRElement::e0(n) : DRElement::e1(n);
                for (long k = 0; k < e; ++k) next = next * gen;
            } else if (lx.tok() == Tok::Ident && lx.ident() == "w") {
                lx.advance();
                lx.expect(Tok::LBrack, "[");
                long a = lx.signed_int();
                lx.expect(Tok::RBrack, "]");
                long e = 1;
                if (lx.tok() == Tok::Caret) {
                    lx.advance();
                    e = lx.signed_int();
                }
                next = DRElement::zeta_power(n, a * e);
            } else if (lx.tok() == Tok::Int && lx.int_value() == 1) {
                lx.advance();
                next = DRElement(n, Rational(1));
            } else {
                break;
            }
            factor = factor * next;
            word = true;
            if (lx.tok() == Tok::Star) lx.advance();
        }
        if (!word && !have_coef) lx.fail("expected term");
        out += factor;
        any = true;
        if (lx.tok() == Tok::Plus) {
            sign = 1;
            lx.advance();
        } else if (lx.tok() == Tok::Minus) {
            sign = -1;
            lx.advance();
        } else {
            break;
        }
    }
    if (lx.tok() != Tok::End) lx.fail("trailing input");
    if (!any) lx.fail("empty expression");
    return out;
}

GeneratorPoly parse_generator_poly(std::string_view s) {
    Lexer lx(s);
    return parse_sum<GeneratorPoly>(lx, [&lx](GeneratorPoly& term, const Rational& coef) {
        GenWord w;
        bool any = false;
        for (;;) {
            if (lx.tok() == Tok::Ident && lx.ident() == "T") {
                lx.advance();
                w.push_back(GenLetter::T());
                any = true;
            } else if (lx.tok() == Tok::Ident && lx.ident() == "G") {
                lx.advance();
                lx.expect(Tok::LBrack, "[");
                long v = lx.signed_int();
                lx.expect(Tok::RBrack, "]");
                w.push_back(GenLetter::G(v));
                any = true;
            } else if (lx.tok() == Tok::Int && lx.int_value() == 1) {
                lx.advance();
                any = true;
            } else {
                break;
            }
            if (lx.tok() == Tok::Star) lx.advance();
        }
        if (!any) return false;
        term.add(w, coef);
        return true;
    });
}

LaurentPoly parse_laurent(std::string_view s) {
    GroupAlgebraElement v = parse_group_element(s);
    LaurentPoly out;
    for (const auto& [w, c] : v.terms()) {
        const auto& sylls = w.syllables();
        if (sylls.size() > 1 || (sylls.size() == 1 && sylls[0].letter != Letter::X0))
            throw ParseError("expected a Laurent polynomial in X0");
        out.add_term(w.is_identity() ? 0 : sylls[0].exponent, c);
    }
    return out;
}

}  // namespace muharm
