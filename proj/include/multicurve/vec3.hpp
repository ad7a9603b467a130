#ifndef MULTICURVE_VEC3_HPP
#define MULTICURVE_VEC3_HPP

#include <array>
#include <compare>
#include <string>

#include "numeric.hpp"

namespace multicurve {

// Integer triple used both for monomial exponents and for weight/valuation
// vectors on the three coordinates.
struct Vec3 {
    std::array<Int, 3> e{};

    Vec3() = default;
    Vec3(Int a, Int b, Int c) : e{std::move(a), std::move(b), std::move(c)} {}

    Int& operator[](std::size_t i) { return e[i]; }
    const Int& operator[](std::size_t i) const { return e[i]; }

    bool operator==(const Vec3& o) const { return e == o.e; }
    bool operator!=(const Vec3& o) const { return e != o.e; }

    Vec3 operator+(const Vec3& o) const { return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}; }
    Vec3 operator-(const Vec3& o) const { return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}; }
    Vec3 operator-() const { return {-e[0], -e[1], -e[2]}; }
    Vec3 operator*(const Int& k) const { return {e[0] * k, e[1] * k, e[2] * k}; }

    Int total_degree() const { return e[0] + e[1] + e[2]; }
    bool is_zero() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    bool nonnegative() const { return e[0] >= 0 && e[1] >= 0 && e[2] >= 0; }
    bool positive() const { return e[0] > 0 && e[1] > 0 && e[2] > 0; }
};

using Exponent = Vec3;
using Weight = Vec3;

inline Int dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// True when a divides b as monomials, i.e. a <= b componentwise.
inline bool divides(const Vec3& a, const Vec3& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

// Plain lexicographic order with x1 > x2 > x3.
inline bool lex_less(const Vec3& a, const Vec3& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

// Graded lexicographic order: total degree first, ties broken by lex.
inline bool grlex_less(const Vec3& a, const Vec3& b) {
    Int da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    return lex_less(a, b);
}

struct GrlexGreater {
    bool operator()(const Vec3& a, const Vec3& b) const { return grlex_less(b, a); }
};

struct GrlexLess {
    bool operator()(const Vec3& a, const Vec3& b) const { return grlex_less(a, b); }
};

// Divides out the gcd of the entries; the zero vector is left unchanged.
inline Vec3 primitive(const Vec3& v) {
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g <= 1)
        return v;
    return {v[0] / g, v[1] / g, v[2] / g};
}

// Renders "[a b c]".
inline std::string to_string(const Vec3& v) {
    return "[" + v[0].str() + " " + v[1].str() + " " + v[2].str() + "]";
}

} // namespace multicurve

#endif
