#include "quasiphase/parser.hpp"

#include "quasiphase/errors.hpp"
#include "quasiphase/gcd.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace quasiphase {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, Equals, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t k = 0;
    auto advance = [&](size_t n) {
        for (size_t t = 0; t < n; ++t) {
            if (s[k] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(s[k]) & 0xC0) != 0x80) {
                ++col;
            }
            ++k;
        }
    };
    while (k < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[k]);
        int l = line, cl = col;
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (std::isdigit(c)) {
            size_t e = k;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            out.push_back({Tok::Int, s.substr(k, e - k), l, cl});
            advance(e - k);
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            size_t e = k;
            while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
            out.push_back({Tok::Ident, s.substr(k, e - k), l, cl});
            advance(e - k);
            continue;
        }
        // U+2212 MINUS SIGN
        if (s.compare(k, 3, "\xE2\x88\x92") == 0) {
            out.push_back({Tok::Minus, "-", l, cl});
            advance(3);
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '=': kind = Tok::Equals; break;
        case ';': kind = Tok::Semi; break;
        case '(':
        case ')':
            throw ParseError("parentheses are not supported; expand the polynomial", l, cl);
        default:
            throw ParseError(std::string("unexpected character '") + s[k] + "'", l, cl);
        }
        out.push_back({kind, std::string(1, s[k]), l, cl});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, VarNames vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

    Poly2 poly() {
        Poly2 r;
        int sign = 1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? -1 : 1;
        r += Rat(sign) * term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = next().kind == Tok::Minus ? -1 : 1;
            r += Rat(sign) * term();
        }
        return r;
    }

    PolySys system() {
        std::optional<Poly2> p, q;
        for (int eq = 0; eq < 2; ++eq) {
            const Token& lhs = expect(Tok::Ident, "equation left-hand side 'd" + vars_.first + "'");
            bool first = lhs.text == "d" + vars_.first;
            bool second = lhs.text == "d" + vars_.second;
            if (!first && !second)
                throw ParseError("expected 'd" + vars_.first + "' or 'd" + vars_.second + "', found '" + lhs.text + "'",
                                 lhs.line, lhs.column);
            std::optional<Poly2>& slot = first ? p : q;
            if (slot) throw ParseError("duplicate equation for '" + lhs.text + "'", lhs.line, lhs.column);
            expect(Tok::Equals, "'='");
            slot = poly();
            if (eq == 0) expect(Tok::Semi, "';' between the two equations");
        }
        if (peek().kind == Tok::Semi) next();
        end();
        return {*p, *q};
    }

    void end() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    const Token& expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        return next();
    }

    int variable_index(const Token& t) const {
        if (t.text == vars_.first) return 0;
        if (t.text == vars_.second) return 1;
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
    }

    Poly2 term() {
        Rat coeff(1);
        bool have_coeff = false;
        if (peek().kind == Tok::Int) {
            BigInt n(next().text);
            BigInt d = 1;
            if (peek().kind == Tok::Slash) {
                next();
                const Token& dt = expect(Tok::Int, "denominator");
                d = BigInt(dt.text);
                if (d == 0) throw ParseError("zero denominator", dt.line, dt.column);
            }
            coeff = Rat(n, d);
            have_coeff = true;
            if (peek().kind == Tok::Star) {
                next();
                if (peek().kind != Tok::Ident) fail("expected a variable after '*'");
            }
        }
        int ex[2] = {0, 0};
        bool have_mono = false;
        if (peek().kind == Tok::Ident) {
            have_mono = true;
            while (true) {
                const Token& v = next();
                int e = 1;
                if (peek().kind == Tok::Caret) {
                    next();
                    const Token& et = expect(Tok::Int, "exponent");
                    if (et.text.size() > 6) throw ParseError("exponent too large", et.line, et.column);
                    e = std::stoi(et.text);
                }
                ex[variable_index(v)] += e;
                if (peek().kind != Tok::Star) break;
                next();
                if (peek().kind != Tok::Ident) fail("expected a variable after '*'");
            }
        }
        if (!have_coeff && !have_mono) fail("expected a term");
        return Poly2::term(coeff, ex[0], ex[1]);
    }

    std::vector<Token> toks_;
    VarNames vars_;
    size_t pos_ = 0;
};

} // namespace

Poly2 parse_poly(const std::string& text, const VarNames& vars) {
    Parser p(lex(text), vars);
    Poly2 r = p.poly();
    p.end();
    return r;
}

PolySys parse_system_unchecked(const std::string& text, const VarNames& vars) {
    if (vars.first == vars.second) throw ParseError("variable names must differ", 1, 1);
    return Parser(lex(text), vars).system();
}

SystemSource parse_system(const std::string& text, const VarNames& vars) {
    PolySys sys = parse_system_unchecked(text, vars);
    if (sys.p.is_zero() || sys.q.is_zero())
        throw DomainError("zero component: both right-hand sides must be non-zero", "non-vanishing vector field components");
    Poly2 g = gcd_bivariate(sys.p, sys.q);
    if (!g.is_constant())
        throw DomainError("components share the non-constant factor " + g.str(vars.first, vars.second),
                          "coprimality of P and Q");
    return {text, sys, vars};
}

} // namespace quasiphase
