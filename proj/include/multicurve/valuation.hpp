#ifndef MULTICURVE_VALUATION_HPP
#define MULTICURVE_VALUATION_HPP

#include <optional>
#include <variant>
#include <vector>

#include "curve.hpp"
#include "polynomial.hpp"

namespace multicurve {

// Valuation with generating sequence x_i -> m_i and key -> w: values on
// monomials are <m, exponent>, the key binomial gets the assigned value w,
// and everything else follows from the key-adic expansion.
struct QuasiMonomialValuation {
    Weight m;
    BinomialGenerator key;
    Int w;

    QuasiMonomialValuation(Weight m_, BinomialGenerator key_, Int w_)
        : m(std::move(m_)), key(std::move(key_)), w(std::move(w_)) {
        if (!m.nonnegative())
            throw error(errc::internal_error, "valuation weights must be nonnegative");
        if (dot(m, key.lead) != dot(m, key.trail))
            throw error(errc::internal_error,
                        "key binomial is not homogeneous for the valuation weights");
        if (w < dot(m, key.lead))
            throw error(errc::internal_error,
                        "assigned key value is below the monomial order of the key");
    }
};

// f = sum_j c_j * key^j with no term of any c_j divisible by the key's
// leading monomial. One reduction step rewrites a term x^e with e >= lead as
// x^(e - lead + trail) plus x^(e - lead) * key; iterating inside a fixed
// n-degree terminates because <e, lead - trail> strictly drops each time and
// the monomials of that degree form a finite set.
inline std::vector<SparsePolynomial> f1_expansion(const SparsePolynomial& f,
                                                  const BinomialGenerator& key) {
    if (key.lead.is_zero() || divides(key.lead, key.trail))
        throw error(errc::internal_error, "key leader must not divide the trailing term");
    std::vector<SparsePolynomial> coeffs;
    SparsePolynomial current = f;
    while (!current.is_zero()) {
        SparsePolynomial remainder = current;
        SparsePolynomial quotient;
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (const auto& [e, c] : remainder.terms()) {
                if (divides(key.lead, e)) {
                    Exponent hit = e;
                    Rational coef = c;
                    Exponent base = hit - key.lead;
                    remainder.add_term(hit, -coef);
                    remainder.add_term(base + key.trail, coef);
                    quotient.add_term(base, coef);
                    reduced = true;
                    break;
                }
            }
        }
        coeffs.push_back(remainder);
        current = quotient;
    }
    if (coeffs.empty())
        coeffs.push_back(SparsePolynomial{});
    return coeffs;
}

// nu(f) = min_j ( ord_m(c_j) + j * w ) over the key-adic expansion;
// nullopt encodes +infinity (only for f = 0).
inline std::optional<Int> nu_value(const QuasiMonomialValuation& val, const SparsePolynomial& f) {
    std::vector<SparsePolynomial> coeffs = f1_expansion(f, val.key);
    std::optional<Int> best;
    Int level = 0;
    for (const auto& c : coeffs) {
        std::optional<Int> o = ord_weight(val.m, c);
        if (o) {
            Int value = *o + level * val.w;
            if (!best || value < *best)
                best = value;
        }
        level += 1;
    }
    return best;
}

namespace detail {

// Enumerate derivative multi-indices of total order <= bound.
inline std::vector<Exponent> derivative_orders(const Int& bound) {
    std::vector<Exponent> out;
    for (Int a = 0; a <= bound; ++a)
        for (Int b = 0; a + b <= bound; ++b)
            for (Int c = 0; a + b + c <= bound; ++c)
                out.push_back({a, b, c});
    return out;
}

} // namespace detail

// f lies in the k-th symbolic power of the curve ideal exactly when every
// partial derivative of total order <= k-1 vanishes along t -> (t^n1, t^n2,
// t^n3). For k <= 0 the symbolic power is the whole ring.
inline bool symbolic_power_member(const CurveSpec& spec, const SparsePolynomial& f, const Int& k) {
    if (k <= 0)
        return true;
    for (const auto& order : detail::derivative_orders(k - 1)) {
        SparsePolynomial d = partial_derivative(f, order);
        if (!substitute_parametrization(d, spec.n).empty())
            return false;
    }
    return true;
}

// One divisorial condition of Lipman's formula: nu(f) >= floor(ideal_value *
// lambda - jacobian_value), where nu is either a plain monomial valuation or
// a quasi-monomial one.
struct ValuationCondition {
    std::variant<Weight, QuasiMonomialValuation> valuation;
    Int ideal_value;
    Int jacobian_value;
};

inline std::optional<Int> condition_value(const ValuationCondition& cond,
                                          const SparsePolynomial& f) {
    if (std::holds_alternative<Weight>(cond.valuation))
        return ord_weight(std::get<Weight>(cond.valuation), f);
    return nu_value(std::get<QuasiMonomialValuation>(cond.valuation), f);
}

inline bool lipman_member(const SparsePolynomial& f,
                          const std::vector<ValuationCondition>& conditions,
                          const Rational& lambda) {
    if (lambda <= 0)
        throw error(errc::nonpositive_lambda, "lambda must be positive");
    for (const auto& cond : conditions) {
        Int bound = floor(Rational(cond.ideal_value) * lambda - Rational(cond.jacobian_value));
        std::optional<Int> value = condition_value(cond, f);
        if (value && *value < bound)
            return false;
    }
    return true;
}

// Jacobian value of the k-th valuation in the chain over weights m.
inline Int nu_k_jacobian(const Weight& m, const Int& k) {
    if (k < 0)
        throw error(errc::internal_error, "chain index must be nonnegative");
    return m[0] + m[1] + m[2] - 1 + k;
}

// The lambda at which the k-th chain valuation excludes x1^a x2^b x3^c f1^d:
// ((a+1)m1 + (b+1)m2 + (c+1)m3 - ord_f1) / (ord_f1 + k) + d + 1.
inline Rational exclusion_threshold(const Weight& m, const Int& ord_f1, const Int& k,
                                    const Int& a, const Int& b, const Int& c, const Int& d) {
    if (ord_f1 + k <= 0)
        throw error(errc::internal_error, "chain valuation must assign a positive key value");
    Int numer = (a + 1) * m[0] + (b + 1) * m[1] + (c + 1) * m[2] - ord_f1;
    return Rational(numer) / Rational(ord_f1 + k) + Rational(d + 1);
}

} // namespace multicurve

#endif
