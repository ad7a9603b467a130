#ifndef MULTICURVE_MULTIPLIER_HPP
#define MULTICURVE_MULTIPLIER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "curve.hpp"
#include "linalg.hpp"
#include "newton.hpp"
#include "valuation.hpp"

namespace multicurve {

// One divisor that survives into the membership formula: weight m, value
// w = ord_m(f2) assigned to the key, ord_m(f1), and the Jacobian correction
// k = m1+m2+m3-1+w-ord_f1. The condition it imposes at level lambda is
// nu_m(f) >= floor(w*lambda - k).
struct EmbeddedDivisorDatum {
    Vec3 m;
    Int w;
    Int ord_f1;
    Int k;
};

// Display data for one half of the subdivided slice: the generator term
// whose order dominates there, its Hilbert basis swept between the rays, and
// the ray orthogonal to the order gap when it lies in the half.
struct HalfConeReport {
    std::string label;
    Exponent term;
    PlaneCone cone;
    std::vector<Vec3> basis;
    std::optional<Vec3> rho;
};

struct SigmaReport {
    PlaneCone sigma;
    std::array<HalfConeReport, 2> halves;
};

struct CurveAnalysis {
    CurveSpec spec;
    std::vector<BinomialGenerator> generators;
    MonomialIdeal tau;
    NewtonPolyhedron newton;
    bool corollary_path = false;
    std::optional<SigmaReport> sigma;
    std::vector<EmbeddedDivisorDatum> G;
    Rational lct;
    bool lct_capped = false;
    std::vector<std::string> warnings;
};

// Which reading of the divisor condition to use: the quasi-monomial
// valuation through the key-adic expansion (default), or the plain monomial
// order of f (for comparison).
enum class ValuationMode { quasi_monomial, plain_order };

namespace detail {

inline Int min_order_f2(const BinomialGenerator& f2, const Vec3& m) {
    Int a = dot(m, f2.lead), b = dot(m, f2.trail);
    return a <= b ? a : b;
}

inline HalfConeReport make_half(const PlaneCone& half, const Exponent& term,
                                const BinomialGenerator& f1, std::vector<std::string>& warnings) {
    HalfConeReport rep;
    rep.label = monomial_label(term);
    rep.term = term;
    rep.cone = half;
    rep.basis = hilbert_basis(half);
    try {
        rep.rho = orthogonal_ray(half, term - f1.lead);
    } catch (const error& e) {
        if (e.code() == errc::whole_plane_orthogonal || e.code() == errc::ray_outside_cone) {
            if (!half.degenerate)
                warnings.push_back("no orthogonal ray in the " + rep.label +
                                   " half; selecting divisors by the order filter only");
        } else {
            throw;
        }
    }
    return rep;
}

} // namespace detail

// Run the whole construction: minimal generators, term ideal, Newton
// polyhedron, and (unless the two lowest generator orders agree, where the
// divisor set is empty) the slice of the octant orthogonal to f1's exponent
// gap, its subdivision at the curve weights, Hilbert bases, orthogonal rays,
// the surviving divisors, and the log canonical threshold.
inline CurveAnalysis analyze(const CurveSpec& spec) {
    CurveAnalysis ca;
    ca.spec = spec;
    ca.generators = minimal_generators(spec);
    ca.tau = term_ideal(spec, ca.generators);
    ca.newton = newton_polyhedron(ca.tau);

    const BinomialGenerator& f1 = ca.generators[0];
    const BinomialGenerator& f2 = ca.generators[1];
    if (ca.generators.size() == 3 && f2.order == ca.generators[2].order)
        ca.warnings.push_back(
            "second and third generators share n-degree " + f2.order.str() +
            "; the graded-lex earlier one plays the role of the second generator");

    ca.corollary_path = (f1.order == f2.order);
    if (!ca.corollary_path) {
        PlaneCone sigma = octant_slice(f1.lead - f1.trail);
        ConeSplit split = subdivide_along(sigma, spec.n, f2.lead, f2.trail);
        SigmaReport rep;
        rep.sigma = sigma;
        rep.halves[0] = detail::make_half(split.first, f2.lead, f1, ca.warnings);
        rep.halves[1] = detail::make_half(split.second, f2.trail, f1, ca.warnings);

        std::vector<Vec3> pool;
        for (const auto& half : rep.halves)
            for (const auto& b : half.basis)
                if (std::find(pool.begin(), pool.end(), b) == pool.end())
                    pool.push_back(b);
        std::vector<Vec3> members;
        for (const auto& b : pool)
            if (dot(b, f1.lead) < detail::min_order_f2(f2, b))
                members.push_back(b);

        // When both orthogonal rays exist, the divisors must be exactly the
        // basis elements strictly between them.
        if (rep.halves[0].rho && rep.halves[1].rho && !rep.halves[0].cone.degenerate &&
            !rep.halves[1].cone.degenerate) {
            Pair r1 = plane_coords(sigma, *rep.halves[0].rho);
            Pair r2 = plane_coords(sigma, *rep.halves[1].rho);
            Int orient = det2(r1, r2);
            if (orient != 0) {
                for (const auto& b : pool) {
                    Pair mc = plane_coords(sigma, b);
                    bool interior = det2(mc, r2) * orient > 0 && det2(r1, mc) * orient > 0;
                    bool filtered = dot(b, f1.lead) < detail::min_order_f2(f2, b);
                    if (interior != filtered)
                        throw error(errc::internal_error,
                                    "order filter disagrees with the orthogonal-ray cone at " +
                                        to_string(b));
                }
            }
        }

        for (const auto& m : members) {
            Int w = detail::min_order_f2(f2, m);
            Int o1 = dot(m, f1.lead);
            if (o1 >= w)
                throw error(errc::embedded_condition_violated,
                            "divisor " + to_string(m) + " does not separate the generator orders");
            ca.G.push_back({m, w, o1, m[0] + m[1] + m[2] - 1 + w - o1});
        }
        ca.sigma = std::move(rep);
    }

    Rational best = lct_monomial(ca.newton);
    for (const auto& dd : ca.G) {
        Rational t = Rational(dd.k + 1) / Rational(dd.w);
        if (t < best)
            best = t;
    }
    if (best > 2) {
        // 1 never lies in the first symbolic power, so the threshold cannot
        // exceed 2 regardless of the other parts.
        ca.lct = 2;
        ca.lct_capped = true;
    } else {
        ca.lct = best;
    }
    return ca;
}

struct MemberBreakdown {
    bool zero_input = false;
    bool symbolic = true;
    bool monomial = true;
    std::vector<bool> valuation; // one entry per divisor datum

    bool value() const {
        if (zero_input)
            return true;
        if (!symbolic || !monomial)
            return false;
        for (bool ok : valuation)
            if (!ok)
                return false;
        return true;
    }
};

// Membership of f in the multiplier ideal at level lambda: the symbolic
// power at floor(lambda - 1), the term-wise monomial test on the Newton
// polyhedron of tau, and one valuation inequality per divisor.
inline MemberBreakdown member(const CurveAnalysis& ca, const SparsePolynomial& f,
                              const Rational& lambda,
                              ValuationMode mode = ValuationMode::quasi_monomial) {
    if (lambda <= 0)
        throw error(errc::nonpositive_lambda, "lambda must be positive");
    MemberBreakdown out;
    if (f.is_zero()) {
        out.zero_input = true;
        return out;
    }
    out.symbolic = symbolic_power_member(ca.spec, f, floor(lambda - Rational(1)));
    for (const auto& [e, c] : f.terms()) {
        if (!howald_member(ca.newton, e, lambda)) {
            out.monomial = false;
            break;
        }
    }
    const BinomialGenerator& f1 = ca.generators[0];
    for (const auto& dd : ca.G) {
        Int bound = floor(lambda * Rational(dd.w) - Rational(dd.k));
        std::optional<Int> val;
        if (mode == ValuationMode::quasi_monomial)
            val = nu_value(QuasiMonomialValuation(dd.m, f1, dd.w), f);
        else
            val = ord_weight(dd.m, f);
        out.valuation.push_back(!val || *val >= bound);
    }
    return out;
}

namespace detail {

inline Rational falling_product(const Exponent& mu, const Exponent& order) {
    Rational prod(1);
    for (std::size_t i = 0; i < 3; ++i) {
        for (Int step = 0; step < order[i]; ++step)
            prod *= Rational(mu[i] - step);
        if (mu[i] < order[i])
            return Rational(0); // some factor above hit zero or went negative
    }
    return prod;
}

// Scale a rational-coefficient polynomial to integer coefficients with
// content 1 and positive leading coefficient.
inline SparsePolynomial integer_normalize(const SparsePolynomial& f) {
    if (f.is_zero())
        return f;
    Int lcm_den = 1, gcd_num = 0;
    for (const auto& [e, c] : f.terms()) {
        Int d = denominator(c);
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    for (const auto& [e, c] : f.terms())
        gcd_num = gcd(gcd_num, numerator(c) * (lcm_den / denominator(c)));
    Rational scale = Rational(lcm_den) / Rational(gcd_num);
    SparsePolynomial g = f * scale;
    if (g.terms().begin()->second < 0)
        g = -g;
    return g;
}

} // namespace detail

// Exact basis of { f supported in n-degree d } intersected with the
// multiplier ideal at lambda: coefficients sit on the monomials passing the
// Newton-polyhedron test, the symbolic part contributes one derivative
// functional per multi-index, and each divisor condition forces the low
// part of the key-adic expansion to vanish (linear in f for fixed d).
inline std::vector<SparsePolynomial> graded_piece(const CurveAnalysis& ca, const Rational& lambda,
                                                  const Int& d,
                                                  ValuationMode mode = ValuationMode::quasi_monomial) {
    if (lambda <= 0)
        throw error(errc::nonpositive_lambda, "lambda must be positive");
    if (d < 0)
        return {};
    std::vector<Exponent> kept;
    for (const auto& mu : monomials_of_degree(ca.spec.n, d))
        if (howald_member(ca.newton, mu, lambda))
            kept.push_back(mu);
    if (mode == ValuationMode::plain_order) {
        // The plain order condition is term-wise, so it just shrinks the
        // coordinate set.
        std::vector<Exponent> narrowed;
        for (const auto& mu : kept) {
            bool ok = true;
            for (const auto& dd : ca.G) {
                Int t = floor(lambda * Rational(dd.w) - Rational(dd.k));
                if (dot(dd.m, mu) < t) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                narrowed.push_back(mu);
        }
        kept = narrowed;
    }
    if (kept.empty())
        return {};

    std::vector<RationalRow> rows;
    Int k = floor(lambda - Rational(1));
    if (k >= 1) {
        for (const auto& order : detail::derivative_orders(k - 1)) {
            RationalRow row(kept.size(), Rational(0));
            bool nonzero = false;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                row[j] = detail::falling_product(kept[j], order);
                if (row[j] != 0)
                    nonzero = true;
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }
    if (mode == ValuationMode::quasi_monomial && !ca.G.empty()) {
        const BinomialGenerator& f1 = ca.generators[0];
        std::vector<std::vector<SparsePolynomial>> expansions;
        expansions.reserve(kept.size());
        for (const auto& mu : kept)
            expansions.push_back(f1_expansion(SparsePolynomial::monomial(mu), f1));
        for (const auto& dd : ca.G) {
            Int t = floor(lambda * Rational(dd.w) - Rational(dd.k));
            if (t <= 0)
                continue;
            std::map<std::pair<std::size_t, std::array<Int, 3>>, RationalRow> low;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                for (std::size_t level = 0; level < expansions[j].size(); ++level) {
                    if (Int(level) * dd.w >= t)
                        break;
                    for (const auto& [eta, c] : expansions[j][level].terms()) {
                        if (dot(dd.m, eta) + Int(level) * dd.w < t) {
                            auto key = std::make_pair(level, eta.e);
                            auto it = low.find(key);
                            if (it == low.end())
                                it = low.emplace(key, RationalRow(kept.size(), Rational(0))).first;
                            it->second[j] = c;
                        }
                    }
                }
            }
            for (auto& [key, row] : low)
                rows.push_back(std::move(row));
        }
    }

    std::vector<SparsePolynomial> basis;
    for (const auto& vec : nullspace(rows, kept.size())) {
        SparsePolynomial f;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (vec[j] != 0)
                f.add_term(kept[j], vec[j]);
        basis.push_back(detail::integer_normalize(f));
    }
    return basis;
}

inline Int default_degree_bound(const CurveAnalysis& ca, const Rational& lambda) {
    const Weight& n = ca.spec.n;
    Int nmax = n[0];
    for (std::size_t i = 1; i < 3; ++i)
        if (n[i] > nmax)
            nmax = n[i];
    return ceil(lambda) * ca.generators.back().order + n[0] + n[1] + n[2] + nmax;
}

struct GeneratorReport {
    std::vector<SparsePolynomial> generators;
    Int degree_bound;
    bool stabilized = true;
};

// Minimal generators of the multiplier ideal across n-degrees up to D: in
// each degree, the piece modulo the coordinate multiples of lower pieces.
// The result is complete only for the stated window; if a generator shows up
// in the top max(n_i) degrees, the window was probably too small.
inline GeneratorReport generators_up_to(const CurveAnalysis& ca, const Rational& lambda,
                                        std::optional<Int> degree_bound = std::nullopt,
                                        ValuationMode mode = ValuationMode::quasi_monomial) {
    GeneratorReport rep;
    rep.degree_bound = degree_bound ? *degree_bound : default_degree_bound(ca, lambda);
    const Weight& n = ca.spec.n;
    Int nmax = n[0];
    for (std::size_t i = 1; i < 3; ++i)
        if (n[i] > nmax)
            nmax = n[i];

    std::map<Int, std::vector<SparsePolynomial>> pieces;
    Int last_new = -1;
    for (Int d = 0; d <= rep.degree_bound; ++d) {
        pieces[d] = graded_piece(ca, lambda, d, mode);
        if (pieces[d].empty())
            continue;
        std::vector<Exponent> mons = monomials_of_degree(n, d);
        std::map<Exponent, std::size_t, GrlexGreater> index;
        for (std::size_t i = 0; i < mons.size(); ++i)
            index[mons[i]] = i;
        auto coords = [&](const SparsePolynomial& f) {
            RationalRow row(mons.size(), Rational(0));
            for (const auto& [e, c] : f.terms())
                row[index.at(e)] = c;
            return row;
        };
        RowSpace span;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            Int dl = d - n[axis];
            if (dl < 0)
                continue;
            Exponent shift;
            shift[axis] = 1;
            for (const auto& g : pieces[dl])
                span.insert(coords(g.shifted(shift, Rational(1))));
        }
        for (const auto& g : pieces[d]) {
            if (span.insert(coords(g))) {
                rep.generators.push_back(g);
                last_new = d;
            }
        }
    }
    rep.stabilized = !(last_new > rep.degree_bound - nmax);
    return rep;
}

struct JumpReport {
    std::vector<Rational> candidates;
    std::vector<Rational> verified;
    std::vector<SparsePolynomial> witnesses; // parallel to verified
    Int degree_bound;
};

// Candidate jumping numbers read off the three parts of the membership
// formula, then each candidate confirmed by comparing graded data against
// the midpoint of the gap below it. Verification is complete only up to the
// degree bound.
inline JumpReport jumping_numbers(const CurveAnalysis& ca, const Rational& T,
                                  std::optional<Int> degree_bound = std::nullopt,
                                  ValuationMode mode = ValuationMode::quasi_monomial) {
    if (T <= 0)
        throw error(errc::nonpositive_lambda, "scan threshold must be positive");
    JumpReport rep;
    rep.degree_bound = degree_bound ? *degree_bound : default_degree_bound(ca, T);
    const Weight& n = ca.spec.n;

    std::set<Rational> cand;
    for (Int i = 2; Rational(i) <= T; ++i)
        cand.insert(Rational(i));
    for (const auto& facet : ca.newton.facets) {
        for (Int v1 = 0; v1 * n[0] <= rep.degree_bound; ++v1)
            for (Int v2 = 0; v1 * n[0] + v2 * n[1] <= rep.degree_bound; ++v2)
                for (Int v3 = 0; v1 * n[0] + v2 * n[1] + v3 * n[2] <= rep.degree_bound; ++v3) {
                    Rational breakpoint =
                        Rational(dot(facet.a, Vec3{v1 + 1, v2 + 1, v3 + 1})) / Rational(facet.b);
                    if (breakpoint > 0 && breakpoint <= T)
                        cand.insert(breakpoint);
                }
    }
    for (const auto& dd : ca.G) {
        for (Int j = 1;; ++j) {
            Rational breakpoint = Rational(dd.k + j) / Rational(dd.w);
            if (breakpoint > T)
                break;
            if (breakpoint > 0)
                cand.insert(breakpoint);
        }
    }
    rep.candidates.assign(cand.begin(), cand.end());

    std::map<Rational, std::map<Int, std::vector<SparsePolynomial>>> cache;
    auto pieces_at = [&](const Rational& lam) -> const std::map<Int, std::vector<SparsePolynomial>>& {
        auto it = cache.find(lam);
        if (it == cache.end()) {
            std::map<Int, std::vector<SparsePolynomial>> all;
            for (Int d = 0; d <= rep.degree_bound; ++d)
                all[d] = graded_piece(ca, lam, d, mode);
            it = cache.emplace(lam, std::move(all)).first;
        }
        return it->second;
    };

    Rational prev(0);
    for (const auto& xi : rep.candidates) {
        Rational probe = (prev + xi) / Rational(2);
        const auto& before = pieces_at(probe);
        const auto& at = pieces_at(xi);
        std::optional<SparsePolynomial> witness;
        for (Int d = 0; d <= rep.degree_bound && !witness; ++d) {
            std::vector<Exponent> mons = monomials_of_degree(n, d);
            std::map<Exponent, std::size_t, GrlexGreater> index;
            for (std::size_t i = 0; i < mons.size(); ++i)
                index[mons[i]] = i;
            auto coords = [&](const SparsePolynomial& f) {
                RationalRow row(mons.size(), Rational(0));
                for (const auto& [e, c] : f.terms())
                    row[index.at(e)] = c;
                return row;
            };
            RowSpace span_at;
            for (const auto& g : at.at(d))
                span_at.insert(coords(g));
            for (const auto& g : before.at(d)) {
                if (!span_at.contains(coords(g))) {
                    witness = g;
                    break;
                }
            }
            // Monotonicity sanity: the ideal at xi must sit inside the one
            // just below it.
            RowSpace span_before;
            for (const auto& g : before.at(d))
                span_before.insert(coords(g));
            for (const auto& g : at.at(d))
                if (!span_before.contains(coords(g)))
                    throw error(errc::internal_error,
                                "graded piece grew when lambda increased to " +
                                    to_string(xi));
        }
        if (witness) {
            rep.verified.push_back(xi);
            rep.witnesses.push_back(*witness);
        }
        prev = xi;
    }
    return rep;
}

inline const Rational& lct(const CurveAnalysis& ca) { return ca.lct; }

} // namespace multicurve

#endif
