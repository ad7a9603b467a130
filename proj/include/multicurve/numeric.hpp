#ifndef MULTICURVE_NUMERIC_HPP
#define MULTICURVE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace multicurve {

// All lattice and coefficient arithmetic runs on arbitrary-precision integers
// and rationals; fixed-width types appear only as container indices.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division with positive divisor; cpp_int's operator/ truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline Int floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

inline Int ceil(const Rational& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = floor_div(num, den);
    return (q * den == num) ? q : q + 1;
}

// Checked narrowing for container indexing only.
inline std::size_t to_index(const Int& v) {
    if (v < 0 || v > Int(SIZE_MAX / 4))
        throw error(errc::internal_error, "index out of range: " + v.str());
    return v.convert_to<std::size_t>();
}

inline std::string to_string(const Int& v) { return v.str(); }

// Rationals render as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with optional leading minus on p; q must be positive.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> parse_error {
        return parse_error(errc::syntax_error, std::string("bad rational: ") + msg, i);
    };
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = (text[i] == '-');
        ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == digits_start)
        throw fail("expected digits");
    Int num(text.substr(digits_start, i - digits_start));
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == den_start)
            throw fail("expected digits after '/'");
        den = Int(text.substr(den_start, i - den_start));
        if (den == 0)
            throw fail("zero denominator");
    }
    if (i != text.size())
        throw fail("trailing characters");
    Rational r(num, den);
    if (negative)
        r = -r;
    return r;
}

} // namespace multicurve

#endif
