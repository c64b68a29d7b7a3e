#include "qonsager/parse.hpp"

#include <cctype>

namespace qonsager {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

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
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                    ": " + why + " in \"" + s + "\"");
    }

    BigInt integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        BigInt v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? BigInt(-v) : v;
    }

    ScalarFraction primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            ScalarFraction v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos;
            return ScalarFraction::q(1);
        }
        if (c == 'r') {
            ++pos;
            return ScalarFraction::r(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ScalarFraction(integer());
        }
        fail("expected number, q, r or '('");
    }

    ScalarFraction factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        ScalarFraction v = primary();
        if (eat('^')) {
            skip_ws();
            BigInt e = integer();
            if (e < -1024 || e > 1024) fail("exponent out of range");
            v = v.pow(static_cast<int>(e));
        }
        return neg ? -v : v;
    }

    ScalarFraction term() {
        ScalarFraction v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                ScalarFraction d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                // Implicit multiplication such as "2q" or "q r" is rejected;
                // the canonical form always writes '*'.
                break;
            }
        }
        return v;
    }

    ScalarFraction expr() {
        ScalarFraction v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                v += term();
            } else if (c == '-') {
                eat('-');
                v -= term();
            } else {
                break;
            }
        }
        return v;
    }
};

}  // namespace

ScalarFraction parse_scalar(const std::string& text) {
    Parser p{text};
    ScalarFraction v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return v;
}

Rational parse_rational(const std::string& text) {
    Parser p{text};
    BigInt num = p.integer();
    BigInt den = 1;
    if (p.eat('/')) den = p.integer();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + text);
    return Rational(num, den);
}

}  // namespace qonsager
