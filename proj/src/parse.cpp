#include "rxy/parse.hpp"

#include <cctype>

namespace rxy {

namespace {

class Parser {
  public:
    Parser(const std::string& text, Ring ring) : s_(text), ring_(ring) {}

    PolyQ parse() {
        PolyQ p = poly();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return p;
    }

  private:
    PolyQ poly() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        PolyQ acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            take();
            PolyQ t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    PolyQ term() {
        PolyQ acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                take();
                acc = acc * factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' ||
                       c == 'z' || c == '(') {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    PolyQ factor() {
        PolyQ b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("exponent must be a nonnegative integer", pos_);
            unsigned long e = std::stoul(natural());
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    PolyQ base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            take();
            PolyQ p = poly();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return p;
        }
        if (c == 'x') {
            take();
            return PolyQ::var_x(ring_);
        }
        if (c == 'y') {
            take();
            return PolyQ::var_y(ring_);
        }
        if (c == 'z') {
            if (ring_ == Ring::Int) throw ParseError("variable z requires --ring z", pos_);
            take();
            return PolyQ::constant(FracElem(RingElem(UniPoly::monomial(1))));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = natural();
            mpz_class n(num), d(1);
            skip_ws();
            if (peek() == '/') {
                const size_t save = pos_;
                take();
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    d = mpz_class(natural());
                    if (d == 0) throw ParseError("zero denominator", pos_);
                } else {
                    pos_ = save;  // a '/' not followed by digits is not ours
                }
            }
            return PolyQ::constant(FracElem::from_rational(ring_, mpq_class(n, d)));
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string natural() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }

    const std::string& s_;
    Ring ring_;
    size_t pos_ = 0;
};

}  // namespace

PolyQ parse_poly(const std::string& text, Ring ring) { return Parser(text, ring).parse(); }

PolyR parse_poly_integral(const std::string& text, Ring ring) {
    const PolyQ p = parse_poly(text, ring);
    if (!is_integral(p)) throw ParseError("polynomial is not integral over the base ring", 0);
    return to_integral(p);
}

RingElem parse_ring_elem(const std::string& text, Ring ring) {
    const PolyQ p = parse_poly(text, ring);
    if (p.deg_x() > 0 || p.deg_y() > 0) throw ParseError("expected a base-ring constant", 0);
    if (!is_integral(p)) throw ParseError("expected an integral base-ring constant", 0);
    return to_integral(p).constant_term();
}

FracElem parse_frac_elem(const std::string& text, Ring ring) {
    auto scalar = [&](const std::string& t) {
        const PolyQ p = parse_poly(t, ring);
        if (p.deg_x() > 0 || p.deg_y() > 0) throw ParseError("expected a scalar", 0);
        return p.constant_term();
    };
    // allow one top-level '/' between scalar expressions, e.g. "-1/z^2"
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            try {
                return scalar(text);  // plain rational literals stay in one piece
            } catch (const ParseError&) {
                const FracElem num = scalar(text.substr(0, i));
                const FracElem den = scalar(text.substr(i + 1));
                return num / den;
            }
        }
    }
    return scalar(text);
}

}  // namespace rxy
