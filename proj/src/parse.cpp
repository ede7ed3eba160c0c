#include "pdyn/parse.hpp"

#include <cctype>

namespace pdyn {

namespace {

bool allowed_var(const std::string& s) {
    static const char* names[] = {"z1", "z2", "x", "y", "s", "t", "e1", "e2"};
    for (const char* n : names)
        if (s == n) return true;
    return false;
}

class Parser {
public:
    Parser(const std::string& text, int order) : s_(text), order_(order) {}

    MPoly expression() {
        skip();
        MPoly acc;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++i_;
        }
        MPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++i_;
            MPoly u = term();
            if (c == '+')
                acc += u;
            else
                acc -= u;
        }
        return acc;
    }

    void finish() {
        skip();
        if (i_ != s_.size()) fail("unexpected character");
    }

    std::size_t pos() const { return i_; }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at byte " + std::to_string(i_));
    }

private:
    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip();
            if (peek() != '*') break;
            ++i_;
            acc *= factor();
        }
        return acc;
    }

    unsigned natural() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a natural number");
        std::string digits = s_.substr(start, i_ - start);
        if (digits.size() > 6) fail("exponent too large");
        return static_cast<unsigned>(std::stoul(digits));
    }

    unsigned optional_power() {
        skip();
        if (peek() != '^') return 1;
        ++i_;
        return natural();
    }

    MPoly factor() {
        skip();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            Integer num(s_.substr(start, i_ - start));
            skip();
            Integer den = 1;
            if (peek() == '/') {
                ++i_;
                skip();
                std::size_t ds = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                if (ds == i_) fail("expected a denominator");
                den = Integer(s_.substr(ds, i_ - ds));
                if (den == 0) fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            return MPoly(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string name = s_.substr(start, i_ - start);
            if (name == "w") {
                if (order_ == 1) throw RootOfUnityUndefined("'w' needs a cyclotomic order above 1 (byte " + std::to_string(start) + ")");
                unsigned k = optional_power();
                return MPoly(Coefficient::zeta(order_, k));
            }
            if (!allowed_var(name)) throw UnknownVariable("'" + name + "' at byte " + std::to_string(start));
            unsigned k = optional_power();
            return MPoly::var(name).pow(k);
        }
        if (c == '(') {
            ++i_;
            MPoly inner = expression();
            expect(')');
            return inner.pow(optional_power());
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int order_;
};

}  // namespace

MPoly parse_poly(const std::string& text, int order) {
    Parser p(text, order);
    MPoly r = p.expression();
    p.finish();
    return r;
}

std::pair<MPoly, MPoly> parse_pair(const std::string& text, int order) {
    Parser p(text, order);
    p.expect('(');
    MPoly a = p.expression();
    p.expect(',');
    MPoly b = p.expression();
    p.expect(')');
    p.finish();
    return {a, b};
}

Rational parse_rational(const std::string& text) {
    MPoly p = parse_poly(text, 1);
    if (!p.is_constant()) throw SyntaxError("expected a rational number");
    return p.constant_value().rational();
}

}  // namespace pdyn
