#ifndef MULTICURVE_CURVE_HPP
#define MULTICURVE_CURVE_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "monomial_ideal.hpp"
#include "parse.hpp"
#include "polynomial.hpp"

namespace multicurve {

// The monomial curve t -> (t^n1, t^n2, t^n3). Entries are positive and
// coprime as a triple; repeats are allowed.
struct CurveSpec {
    Weight n;
};

inline CurveSpec validate_curve(const Weight& n) {
    for (std::size_t i = 0; i < 3; ++i)
        if (n[i] <= 0)
            throw error(errc::non_positive_entry,
                        "curve exponents must be positive, got " + to_string(n));
    Int g = gcd(gcd(n[0], n[1]), n[2]);
    if (g != 1)
        throw error(errc::not_primitive,
                    "not primitive: curve exponents must be coprime as a triple; divide " +
                        to_string(n) + " by " + g.str());
    return CurveSpec{n};
}

inline CurveSpec validate_curve(const Int& n1, const Int& n2, const Int& n3) {
    return validate_curve(Weight{n1, n2, n3});
}

// One defining binomial x^lead - x^trail, homogeneous for the n-grading.
struct BinomialGenerator {
    Exponent lead;
    Exponent trail;
    Int order; // common n-degree of both terms

    SparsePolynomial poly() const {
        SparsePolynomial p = SparsePolynomial::monomial(lead);
        p.add_term(trail, Rational(-1));
        return p;
    }
};

inline std::string to_string(const BinomialGenerator& g) {
    return monomial_string(g.lead) + " - " + monomial_string(g.trail);
}

// All monomials of n-degree d, graded-lex descending. Empty when d is not
// representable in the semigroup.
inline std::vector<Exponent> monomials_of_degree(const Weight& n, const Int& d) {
    std::vector<Exponent> out;
    if (d < 0)
        return out;
    for (Int e3 = 0; e3 * n[2] <= d; ++e3) {
        Int rem3 = d - e3 * n[2];
        for (Int e2 = 0; e2 * n[1] <= rem3; ++e2) {
            Int rem2 = rem3 - e2 * n[1];
            if (rem2 % n[0] == 0)
                out.push_back({rem2 / n[0], e2, e3});
        }
    }
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

// Number of monomials of each n-degree 0..dmax (three-coin counting).
inline std::vector<unsigned long long> degree_counts(const Weight& n, const Int& dmax) {
    std::vector<unsigned long long> count(to_index(dmax) + 1, 0);
    count[0] = 1;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        std::size_t step = to_index(n[axis]);
        for (std::size_t d = step; d < count.size(); ++d)
            count[d] += count[d - step];
    }
    return count;
}

// Degree-d membership test for the homogeneous ideal spanned by the given
// binomials: builds the span of all monomial multiples landing in degree d.
class GradedIdealSlice {
public:
    GradedIdealSlice(const Weight& n, const std::vector<BinomialGenerator>& gens, const Int& d)
        : monomials_(monomials_of_degree(n, d)) {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            index_[monomials_[i]] = i;
        for (const auto& g : gens) {
            if (g.order > d)
                continue;
            for (const auto& shift : monomials_of_degree(n, d - g.order)) {
                RationalRow row(monomials_.size(), Rational(0));
                row[index_.at(shift + g.lead)] = 1;
                row[index_.at(shift + g.trail)] = -1;
                span_.insert(std::move(row));
            }
        }
    }

    RationalRow coordinates(const SparsePolynomial& f) const {
        RationalRow row(monomials_.size(), Rational(0));
        for (const auto& [e, c] : f.terms()) {
            auto it = index_.find(e);
            if (it == index_.end())
                throw error(errc::internal_error, "polynomial is not homogeneous of the slice degree");
            row[it->second] = c;
        }
        return row;
    }

    bool contains(const SparsePolynomial& f) const { return span_.contains(coordinates(f)); }
    std::size_t rank() const { return span_.rank(); }
    std::size_t monomial_count() const { return monomials_.size(); }

private:
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t, GrlexGreater> index_;
    RowSpace span_;
};

inline bool in_graded_ideal(const SparsePolynomial& f, const Weight& n,
                            const std::vector<BinomialGenerator>& gens, const Int& d) {
    return GradedIdealSlice(n, gens, d).contains(f);
}

namespace detail {

// Values up to maxval reachable as nonnegative combinations of a and b.
inline std::vector<bool> reachable_values(const Int& a, const Int& b, const Int& maxval) {
    std::vector<bool> reach(to_index(maxval) + 1, false);
    reach[0] = true;
    std::size_t sa = to_index(a), sb = to_index(b);
    for (std::size_t v = sa; v < reach.size(); ++v)
        if (reach[v - sa])
            reach[v] = true;
    for (std::size_t v = sb; v < reach.size(); ++v)
        if (reach[v - sb])
            reach[v] = true;
    return reach;
}

struct PowerRelation {
    std::size_t axis = 0;
    Int c;                                   // minimal multiplier
    std::vector<std::pair<Int, Int>> reps;   // c*n_axis = reps.first*n_j + reps.second*n_k
};

// c_i = min { c >= 1 : c n_i lies in the semigroup of the other two }, with
// every representation of c_i n_i over (n_j, n_k). c_i <= min(n_j, n_k)
// always, since n_i * n_j is such a multiple.
inline PowerRelation power_relation(const Weight& n, std::size_t axis) {
    std::size_t j = (axis + 1) % 3, k = (axis + 2) % 3;
    Int nj = n[j] <= n[k] ? n[j] : n[k];
    Int bound = nj * n[axis];
    std::vector<bool> reach = reachable_values(n[j], n[k], bound);
    PowerRelation rel;
    rel.axis = axis;
    for (Int c = 1;; ++c) {
        Int value = c * n[axis];
        if (value > bound)
            throw error(errc::internal_error, "coin search exceeded its provable bound");
        if (reach[to_index(value)]) {
            rel.c = c;
            for (Int a = 0; a * n[j] <= value; ++a) {
                Int rest = value - a * n[j];
                if (rest % n[k] == 0)
                    rel.reps.emplace_back(a, rest / n[k]);
            }
            return rel;
        }
    }
}

inline bool is_pure_power(const Exponent& e) {
    int nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (e[i] != 0)
            ++nonzero;
    return nonzero <= 1;
}

// Leader orientation: the unique pure-power term leads; with two pure powers
// the graded-lex-larger one does.
inline BinomialGenerator orient(const Exponent& a, const Exponent& b, const Int& order) {
    bool pa = is_pure_power(a), pb = is_pure_power(b);
    if (pa != pb)
        return pa ? BinomialGenerator{a, b, order} : BinomialGenerator{b, a, order};
    if (grlex_less(b, a))
        return BinomialGenerator{a, b, order};
    return BinomialGenerator{b, a, order};
}

} // namespace detail

// Minimal binomial generators of the curve ideal, sorted by n-degree with
// graded-lex tie-breaks. Candidates come from the three power relations
// (every representation); a greedy pass keeps a candidate only when it is not
// already in the degree slice spanned by the kept ones.
inline std::vector<BinomialGenerator> minimal_generators(const CurveSpec& spec) {
    const Weight& n = spec.n;
    std::vector<BinomialGenerator> candidates;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        detail::PowerRelation rel = detail::power_relation(n, axis);
        std::size_t j = (axis + 1) % 3, k = (axis + 2) % 3;
        Exponent pure;
        pure[axis] = rel.c;
        for (const auto& [a, b] : rel.reps) {
            Exponent mixed;
            mixed[j] = a;
            mixed[k] = b;
            candidates.push_back(detail::orient(pure, mixed, rel.c * n[axis]));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const BinomialGenerator& a, const BinomialGenerator& b) {
                  if (a.order != b.order)
                      return a.order < b.order;
                  if (a.lead != b.lead)
                      return grlex_less(a.lead, b.lead);
                  return grlex_less(a.trail, b.trail);
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const BinomialGenerator& a, const BinomialGenerator& b) {
                                     return (a.lead == b.lead && a.trail == b.trail) ||
                                            (a.lead == b.trail && a.trail == b.lead);
                                 }),
                     candidates.end());

    std::vector<BinomialGenerator> chosen;
    for (const auto& cand : candidates) {
        if (!in_graded_ideal(cand.poly(), n, chosen, cand.order))
            chosen.push_back(cand);
    }

    if (chosen.size() < 2 || chosen.size() > 3)
        throw error(errc::internal_error,
                    "expected 2 or 3 minimal generators, found " + std::to_string(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        std::vector<BinomialGenerator> others;
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i)
                others.push_back(chosen[j]);
        if (in_graded_ideal(chosen[i].poly(), n, others, chosen[i].order))
            throw error(errc::internal_error, "generator set is not minimal");
    }
    return chosen;
}

// Smallest monomial ideal containing the curve ideal: a monomial belongs to
// it exactly when its n-degree is shared with another monomial. The search
// box is sound because any minimal generator a has a_i <= c_i on every axis
// (otherwise the pure power x_i^{c_i}, itself in the ideal, divides it).
inline MonomialIdeal term_ideal(const CurveSpec& spec,
                                const std::vector<BinomialGenerator>& gens) {
    const Weight& n = spec.n;
    Int cmax = 0, nmax = 0;
    std::array<Int, 3> c;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        c[axis] = detail::power_relation(n, axis).c;
        cmax = std::max(cmax, c[axis]);
        nmax = std::max(nmax, n[axis]);
    }
    Int box = cmax + nmax;
    std::vector<unsigned long long> count = degree_counts(n, dot(n, Weight{box, box, box}));
    auto shared = [&](const Exponent& e) { return count[to_index(dot(n, e))] >= 2; };

    std::vector<Exponent> minimal;
    for (Int e1 = 0; e1 <= box; ++e1)
        for (Int e2 = 0; e2 <= box; ++e2)
            for (Int e3 = 0; e3 <= box; ++e3) {
                Exponent e{e1, e2, e3};
                if (!shared(e))
                    continue;
                bool is_minimal = true;
                for (std::size_t i = 0; i < 3 && is_minimal; ++i) {
                    if (e[i] == 0)
                        continue;
                    Exponent down = e;
                    down[i] -= 1;
                    if (shared(down))
                        is_minimal = false;
                }
                if (is_minimal) {
                    for (std::size_t i = 0; i < 3; ++i)
                        if (e[i] > c[i])
                            throw error(errc::internal_error,
                                        "term ideal generator outside its provable bound");
                    minimal.push_back(e);
                }
            }

    // Present in generator-term order (each generator's leader then trailer);
    // every minimal generator of the term ideal is a term of some binomial.
    std::vector<Exponent> ordered;
    auto take = [&](const Exponent& e) {
        auto it = std::find(minimal.begin(), minimal.end(), e);
        if (it != minimal.end()) {
            if (std::find(ordered.begin(), ordered.end(), e) == ordered.end())
                ordered.push_back(e);
            return true;
        }
        return false;
    };
    for (const auto& g : gens) {
        take(g.lead);
        take(g.trail);
    }
    if (ordered.size() != minimal.size())
        throw error(errc::internal_error,
                    "term ideal has a minimal generator that is not a generator term");

    MonomialIdeal ideal = MonomialIdeal::from_generators(ordered);

    bool pure[3] = {false, false, false};
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < 3; ++i)
            if (detail::is_pure_power(g) && g[i] > 0)
                pure[i] = true;
    if (!pure[0] || !pure[1] || !pure[2])
        throw error(errc::internal_error, "term ideal misses a pure power of some variable");
    return ideal;
}

inline MonomialIdeal term_ideal(const CurveSpec& spec) {
    return term_ideal(spec, minimal_generators(spec));
}

} // namespace multicurve

#endif
