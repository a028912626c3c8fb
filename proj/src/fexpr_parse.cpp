#include <cctype>
#include <optional>

#include "fwcodes/fexpr.hpp"

// Recursive-descent parser for the function syntax documented in the README:
//
//   expr    := term { ('+'|'-') term }          field-level '-' is the same as '+'
//   term    := factor { '*' factor }            at most one non-constant factor;
//                                               several x-powers multiply into one
//   factor  := atom [ '^' intpow ]
//   atom    := 'x' | 'w' | uint | 'tr' '[' uint '/' uint ']' '(' expr ')' | '(' expr ')'
//              (the trace brackets take plain integers, not integer expressions)
//   intpow  := uint | '(' intexpr ')'
//   intexpr := intterm { ('+'|'-') intterm }    exact big-integer arithmetic
//   intterm := intatom2 { ('*'|'/') intatom2 }  '/' must divide exactly
//   intatom2:= intatom [ '^' intatom2 ]
//   intatom := uint | '(' intexpr ')'
//
// 'w' is the GF(4) element with w^2+w+1=0; a bare integer in a field position is
// the element with that bit pattern.

namespace fwc::fexpr {

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    FieldPtr field;

    [[noreturn]] void err(const std::string& what) const {
        fail(Err::ParseError, what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) err(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    BigInt uint_lit() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) err("expected integer");
        BigInt v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    // ---- integer expressions ----
    BigInt int_expr() {
        BigInt v = int_term();
        while (true) {
            if (eat('+')) v += int_term();
            else if (eat('-')) v -= int_term();
            else return v;
        }
    }

    BigInt int_term() {
        BigInt v = int_pow_chain();
        while (true) {
            if (eat('*')) v *= int_pow_chain();
            else if (eat('/')) {
                BigInt d = int_pow_chain();
                if (d == 0) err("division by zero in exponent arithmetic");
                if (v % d != 0) err("inexact integer division in exponent arithmetic");
                v /= d;
            } else
                return v;
        }
    }

    BigInt int_pow_chain() {  // right associative
        BigInt b = int_atom();
        if (eat('^')) {
            BigInt e = int_pow_chain();
            if (e < 0) err("negative power in exponent arithmetic");
            BigInt r = 1;
            for (BigInt i = 0; i < e; ++i) r *= b;
            return r;
        }
        return b;
    }

    BigInt int_atom() {
        if (eat('(')) {
            BigInt v = int_expr();
            expect(')');
            return v;
        }
        return uint_lit();
    }

    BigInt int_pow() {  // the thing after '^' in a field factor
        if (peek() == '(') {
            expect('(');
            BigInt v = int_expr();
            expect(')');
            return v;
        }
        return uint_lit();
    }

    // ---- field expressions ----
    struct Factor {
        enum Kind { Const, XPow, Wrapped } kind;
        Elt c = 0;
        BigInt e = 1;
        std::optional<FuncExpr> node;
    };

    Factor atom() {
        skip_ws();
        if (pos >= s.size()) err("unexpected end of input");
        char ch = s[pos];
        if (ch == 'x') {
            ++pos;
            return {Factor::XPow, 0, 1, std::nullopt};
        }
        if (ch == 'w') {
            ++pos;
            return {Factor::Const, field->omega(), 1, std::nullopt};
        }
        if (ch == 't' && s.substr(pos, 2) == "tr") {
            pos += 2;
            expect('[');
            BigInt nn = uint_lit();
            expect('/');
            BigInt mm = uint_lit();
            expect(']');
            if (nn != field->n()) err("relative trace must be tr[" + std::to_string(field->n()) + "/m]");
            expect('(');
            FuncExpr inner = expr();
            expect(')');
            return {Factor::Wrapped, 0, 1, FuncExpr::rel_trace(inner, static_cast<int>(mm))};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            BigInt v = uint_lit();
            if (v >= field->order()) err("field constant out of range");
            return {Factor::Const, static_cast<Elt>(v), 1, std::nullopt};
        }
        if (ch == '(') {
            ++pos;
            FuncExpr inner = expr();
            expect(')');
            return {Factor::Wrapped, 0, 1, inner};
        }
        err("expected 'x', 'w', a constant, 'tr[...]' or '('");
    }

    Factor factor() {
        Factor a = atom();
        if (eat('^')) {
            BigInt e = int_pow();
            if (e < 0) err("negative exponent");
            switch (a.kind) {
                case Factor::Const:
                    a.c = field->pow(a.c, e);
                    break;
                case Factor::XPow:
                    a.e = e;
                    break;
                case Factor::Wrapped:
                    a.node = FuncExpr::power(*a.node, e);
                    break;
            }
        }
        return a;
    }

    FuncExpr term() {
        std::vector<Factor> fs{factor()};
        while (eat('*')) fs.push_back(factor());
        Elt coeff = 1;
        std::optional<BigInt> xexp;
        std::optional<FuncExpr> wrapped;
        for (auto& f : fs) {
            switch (f.kind) {
                case Factor::Const:
                    coeff = field->mul(coeff, f.c);
                    break;
                case Factor::XPow:
                    xexp = xexp ? *xexp + f.e : f.e;
                    break;
                case Factor::Wrapped:
                    if (wrapped) err("products of trace/power expressions are not supported");
                    wrapped = f.node;
                    break;
            }
        }
        if (wrapped && xexp) err("products of x-powers with trace/power expressions are not supported");
        if (wrapped) {
            if (coeff != 1) err("coefficients on trace/power expressions are not supported");
            return *wrapped;
        }
        if (xexp) return FuncExpr::monomial(field, coeff, *xexp);
        return FuncExpr::constant(field, coeff);
    }

    FuncExpr expr() {
        std::vector<FuncExpr> terms{term()};
        while (true) {
            if (eat('+') || eat('-')) terms.push_back(term());
            else break;
        }
        return FuncExpr::sum(std::move(terms));
    }
};

}  // namespace

FuncExpr parse(std::string_view text, FieldPtr field) {
    Parser p{text, 0, std::move(field)};
    FuncExpr e = p.expr();
    p.skip_ws();
    if (p.pos != p.s.size()) p.err("trailing input");
    return e;
}

}  // namespace fwc::fexpr
