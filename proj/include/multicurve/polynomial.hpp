#ifndef MULTICURVE_POLYNOMIAL_HPP
#define MULTICURVE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vec3.hpp"

namespace multicurve {

// Polynomials in Q[x1,x2,x3], stored as exponent -> coefficient with the
// graded-lex-largest monomial first. Zero coefficients are never stored.
class SparsePolynomial {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    SparsePolynomial() = default;

    static SparsePolynomial monomial(Exponent e, Rational c = Rational(1)) {
        SparsePolynomial p;
        if (c != 0)
            p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    static SparsePolynomial constant(Rational c) { return monomial(Exponent{}, std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Leading term in graded lex; only valid on nonzero polynomials.
    const Exponent& leading_exponent() const { return terms_.begin()->first; }

    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }

    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }

    SparsePolynomial operator-() const {
        SparsePolynomial r;
        for (const auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    SparsePolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coef] : terms_)
            coef *= c;
        return *this;
    }

    friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) {
        a *= c;
        return a;
    }

    // Multiplies by c * x^shift without building a temporary polynomial.
    SparsePolynomial shifted(const Exponent& shift, const Rational& c = Rational(1)) const {
        SparsePolynomial r;
        if (c == 0)
            return r;
        for (const auto& [e, coef] : terms_)
            r.terms_[e + shift] = coef * c;
        return r;
    }

    SparsePolynomial pow(unsigned k) const {
        SparsePolynomial r = constant(Rational(1));
        for (unsigned i = 0; i < k; ++i)
            r *= *this;
        return r;
    }

    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePolynomial& o) const { return terms_ != o.terms_; }

private:
    TermMap terms_;
};

inline SparsePolynomial partial_derivative(const SparsePolynomial& f, std::size_t axis) {
    SparsePolynomial r;
    for (const auto& [e, c] : f.terms()) {
        if (e[axis] == 0)
            continue;
        Exponent d = e;
        Rational coef = c * Rational(e[axis]);
        d[axis] -= 1;
        r.add_term(d, coef);
    }
    return r;
}

// Univariate result of substituting x_i -> t^{n_i}: exponent of t -> coefficient.
using UnivariatePolynomial = std::map<Int, Rational>;

inline SparsePolynomial partial_derivative(const SparsePolynomial& f, const Vec3& order) {
    SparsePolynomial r = f;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (Int k = 0; k < order[axis]; ++k)
            r = partial_derivative(r, axis);
    return r;
}

inline UnivariatePolynomial substitute_parametrization(const SparsePolynomial& f, const Weight& n) {
    UnivariatePolynomial r;
    for (const auto& [e, c] : f.terms()) {
        Int d = dot(n, e);
        auto [it, inserted] = r.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                r.erase(it);
        }
    }
    return r;
}

// min over the support of <m, e>; nullopt encodes +infinity for the zero polynomial.
inline std::optional<Int> ord_weight(const Weight& m, const SparsePolynomial& f) {
    std::optional<Int> best;
    for (const auto& [e, c] : f.terms()) {
        Int v = dot(m, e);
        if (!best || v < *best)
            best = v;
    }
    return best;
}

namespace detail {

inline void append_power(std::string& out, const char* var, const Int& e, bool& first) {
    if (e == 0)
        return;
    if (!first)
        out += "*";
    out += var;
    if (e != 1) {
        out += "^";
        out += e.str();
    }
    first = false;
}

} // namespace detail

// "x*y^2" style; empty string for the constant monomial.
inline std::string monomial_string(const Exponent& e) {
    std::string out;
    bool first = true;
    detail::append_power(out, "x", e[0], first);
    detail::append_power(out, "y", e[1], first);
    detail::append_power(out, "z", e[2], first);
    return out;
}

// "x^2y" style without '*', used for compact cone labels.
inline std::string monomial_label(const Exponent& e) {
    std::string out = monomial_string(e), compact;
    for (char c : out)
        if (c != '*')
            compact += c;
    return compact;
}

// Canonical rendering: graded-lex-descending terms joined with " + "/" - ".
// parse_polynomial inverts this exactly.
inline std::string to_string(const SparsePolynomial& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string mono = monomial_string(e);
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += "*";
            }
            out += mono;
        }
        first = false;
    }
    return out;
}

inline std::string to_string(const UnivariatePolynomial& f) {
    if (f.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const auto& [d, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (d == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += "*";
            }
            out += "t";
            if (d != 1) {
                out += "^";
                out += d.str();
            }
        }
        first = false;
    }
    return out;
}

} // namespace multicurve

#endif
