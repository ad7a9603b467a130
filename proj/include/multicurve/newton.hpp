#ifndef MULTICURVE_NEWTON_HPP
#define MULTICURVE_NEWTON_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "monomial_ideal.hpp"
#include "vec3.hpp"

namespace multicurve {

// One non-coordinate supporting plane <a, v> >= b of the Newton polyhedron,
// with a primitive and nonnegative and b >= 1.
struct NewtonFacet {
    Vec3 a;
    Int b;
};

struct NewtonPolyhedron {
    std::vector<NewtonFacet> facets;
};

inline bool operator==(const NewtonFacet& l, const NewtonFacet& r) {
    return l.a == r.a && l.b == r.b;
}

namespace detail {

// Rank of the affine span of the tight points and recession rays of a
// candidate facet: points contribute differences from a base point, rays
// contribute themselves. The plane is a facet exactly when this is 2.
inline int affine_rank(const std::vector<Vec3>& points, const std::vector<Vec3>& rays) {
    std::vector<Vec3> dirs = rays;
    for (std::size_t i = 1; i < points.size(); ++i)
        dirs.push_back(points[i] - points[0]);
    // Gaussian elimination over the rationals is overkill for 3 columns;
    // count independent vectors by repeated cross products.
    std::vector<Vec3> basis;
    for (const auto& d : dirs) {
        if (d.is_zero())
            continue;
        if (basis.empty()) {
            basis.push_back(d);
        } else if (basis.size() == 1) {
            if (!cross(basis[0], d).is_zero())
                basis.push_back(d);
        } else {
            if (dot(cross(basis[0], basis[1]), d) != 0)
                return 3;
        }
    }
    return static_cast<int>(basis.size());
}

} // namespace detail

// Facets of the Newton polyhedron of a monomial ideal (convex hull of the
// exponents plus the nonnegative octant), excluding coordinate planes.
// Candidate normals come from cross products of generator pairs, generator
// and axis ray, or two axis rays; a candidate survives when the points and
// rays it supports tightly span a 2-plane.
inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    const std::vector<Exponent>& gens = ideal.generators();
    if (gens.empty())
        throw error(errc::internal_error, "Newton polyhedron of the zero ideal");

    std::vector<Vec3> axes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Vec3> candidates;
    auto push = [&](Vec3 v) {
        if (v.is_zero())
            return;
        if (v[0] < 0 || v[1] < 0 || v[2] < 0)
            v = -v;
        if (v[0] < 0 || v[1] < 0 || v[2] < 0)
            return;
        candidates.push_back(primitive(v));
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            for (std::size_t k = j + 1; k < gens.size(); ++k)
                push(cross(gens[j] - gens[i], gens[k] - gens[i]));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            for (const auto& axis : axes)
                push(cross(gens[j] - gens[i], axis));
    for (const auto& axis : axes)
        candidates.push_back(axis);

    std::set<std::array<Int, 3>> seen;
    NewtonPolyhedron result;
    for (const auto& a : candidates) {
        if (!seen.insert(a.e).second)
            continue;
        Int b = dot(a, gens[0]);
        for (const auto& g : gens)
            b = std::min(b, dot(a, g));
        if (b < 1)
            continue; // coordinate plane or degenerate support
        std::vector<Vec3> tight_points, tight_rays;
        for (const auto& g : gens)
            if (dot(a, g) == b)
                tight_points.push_back(g);
        for (const auto& axis : axes)
            if (dot(a, axis) == 0)
                tight_rays.push_back(axis);
        if (detail::affine_rank(tight_points, tight_rays) == 2)
            result.facets.push_back({a, b});
    }
    std::sort(result.facets.begin(), result.facets.end(),
              [](const NewtonFacet& l, const NewtonFacet& r) {
                  if (l.a != r.a)
                      return lex_less(l.a, r.a);
                  return l.b < r.b;
              });
    return result;
}

// x^v lies in the multiplier ideal of the monomial ideal to power lambda
// exactly when <a, v + 1> > lambda * b on every facet.
inline bool howald_member(const NewtonPolyhedron& np, const Exponent& v, const Rational& lambda) {
    if (lambda <= 0)
        throw error(errc::nonpositive_lambda, "lambda must be positive");
    Int p = numerator(lambda), q = denominator(lambda);
    Vec3 shifted = v + Vec3{1, 1, 1};
    for (const auto& f : np.facets)
        if (q * dot(f.a, shifted) <= p * f.b)
            return false;
    return true;
}

// Minimal monomial generators of that multiplier ideal. Any minimal
// generator v has, on some facet with a_i >= 1, a_i v_i <= <a, v+1> <=
// lambda b + a_i (the facet blocking v - e_i), so v_i <= floor(lambda b /
// a_i); the per-axis maximum of those bounds is a sound search box.
inline MonomialIdeal howald_generators(const NewtonPolyhedron& np, const Rational& lambda) {
    if (lambda <= 0)
        throw error(errc::nonpositive_lambda, "lambda must be positive");
    if (np.facets.empty())
        return MonomialIdeal::from_generators({Exponent{0, 0, 0}});
    std::array<Int, 3> box{-1, -1, -1};
    for (const auto& f : np.facets)
        for (std::size_t i = 0; i < 3; ++i)
            if (f.a[i] >= 1)
                box[i] = std::max(box[i], floor(lambda * Rational(f.b) / Rational(f.a[i])));
    for (std::size_t i = 0; i < 3; ++i)
        if (box[i] < 0)
            throw error(errc::internal_error, "no facet bounds an axis of the search box");

    std::vector<Exponent> found;
    for (Int v1 = 0; v1 <= box[0]; ++v1)
        for (Int v2 = 0; v2 <= box[1]; ++v2)
            for (Int v3 = 0; v3 <= box[2]; ++v3) {
                Exponent v{v1, v2, v3};
                if (!howald_member(np, v, lambda))
                    continue;
                bool minimal = true;
                for (std::size_t i = 0; i < 3 && minimal; ++i) {
                    if (v[i] == 0)
                        continue;
                    Exponent down = v;
                    down[i] -= 1;
                    if (howald_member(np, down, lambda))
                        minimal = false;
                }
                if (minimal)
                    found.push_back(v);
            }
    if (found.empty())
        throw error(errc::internal_error, "multiplier ideal of a monomial ideal came out empty");
    return MonomialIdeal::from_generators(found);
}

// Log canonical threshold of the monomial ideal: min over facets of
// <a, 1> / b. Throws for the unit ideal, which has no facets.
inline Rational lct_monomial(const NewtonPolyhedron& np) {
    if (np.facets.empty())
        throw error(errc::unit_ideal, "the unit ideal has no log canonical threshold");
    std::optional<Rational> best;
    Vec3 ones{1, 1, 1};
    for (const auto& f : np.facets) {
        Rational value = Rational(dot(f.a, ones)) / Rational(f.b);
        if (!best || value < *best)
            best = value;
    }
    return *best;
}

} // namespace multicurve

#endif
