#ifndef MULTICURVE_PARSE_HPP
#define MULTICURVE_PARSE_HPP

#include <cctype>
#include <string>

#include "polynomial.hpp"

namespace multicurve {

namespace detail {

// Recursive-descent parser for polynomial text. Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ['^' integer]
//   base   := integer ['/' integer] | variable | '(' expr ')'
// Variables are x, y, z with aliases x1, x2, x3.
class PolynomialParser {
public:
    explicit PolynomialParser(const std::string& text) : text_(text) {}

    SparsePolynomial parse() {
        SparsePolynomial p = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            throw parse_error(errc::syntax_error, "unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(errc::syntax_error, msg, pos_);
    }

    Int parse_uint() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        return Int(text_.substr(start, pos_ - start));
    }

    SparsePolynomial parse_expr() {
        skip_space();
        bool negate = false;
        if (consume('-'))
            negate = true;
        else
            consume('+');
        SparsePolynomial p = parse_term();
        if (negate)
            p = -p;
        for (;;) {
            if (consume('+'))
                p += parse_term();
            else if (consume('-'))
                p -= parse_term();
            else
                break;
        }
        return p;
    }

    SparsePolynomial parse_term() {
        SparsePolynomial p = parse_factor();
        while (consume('*'))
            p *= parse_factor();
        return p;
    }

    SparsePolynomial parse_factor() {
        skip_space();
        if (consume('-'))
            return -parse_factor();
        SparsePolynomial base = parse_base();
        if (consume('^')) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw parse_error(errc::negative_exponent, "negative exponent", pos_);
            Int e = parse_uint();
            if (e > 4096)
                fail("exponent too large");
            return base.pow(e.convert_to<unsigned>());
        }
        return base;
    }

    SparsePolynomial parse_base() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_uint();
            if (consume('/')) {
                std::size_t den_pos = pos_;
                Int den = parse_uint();
                if (den == 0)
                    throw parse_error(errc::syntax_error, "zero denominator", den_pos);
                return SparsePolynomial::constant(Rational(num, den));
            }
            return SparsePolynomial::constant(Rational(num));
        }
        if (consume('(')) {
            SparsePolynomial inner = parse_expr();
            if (!consume(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    SparsePolynomial parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        std::size_t axis;
        if (name == "x" || name == "x1")
            axis = 0;
        else if (name == "y" || name == "x2")
            axis = 1;
        else if (name == "z" || name == "x3")
            axis = 2;
        else {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        Exponent e;
        e[axis] = 1;
        return SparsePolynomial::monomial(e);
    }
};

} // namespace detail

inline SparsePolynomial parse_polynomial(const std::string& text) {
    return detail::PolynomialParser(text).parse();
}

} // namespace multicurve

#endif
