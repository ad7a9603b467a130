#ifndef MULTICURVE_CONE_HPP
#define MULTICURVE_CONE_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "vec3.hpp"

namespace multicurve {

// A two-dimensional rational cone inside the plane w-perp, cut out of the
// nonnegative octant. b1, b2 is a basis of the lattice (w-perp) intersect Z^3,
// so plane points have unique integer coordinates. A degenerate cone is a
// single ray (both slots equal).
struct PlaneCone {
    Vec3 w;
    Vec3 b1, b2;
    std::array<Vec3, 2> ray;
    bool degenerate = false;
};

// 2D integer pairs in plane coordinates.
using Pair = std::array<Int, 2>;

inline Int det2(const Pair& a, const Pair& b) { return a[0] * b[1] - a[1] * b[0]; }

namespace detail {

// g = gcd(a, b) >= 0 together with x a + y b = g.
inline void extended_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, x_ = 0;
    Int old_y = 0, y_ = 1;
    while (r != 0) {
        Int q = old_r / r; // truncated division is fine: only g's sign is fixed below
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x_;
        old_x = x_;
        x_ = t;
        t = old_y - q * y_;
        old_y = y_;
        y_ = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    g = old_r;
    x = old_x;
    y = old_y;
}

// v inside the cone spanned by independent A, B (closed; strict excludes the
// boundary rays).
inline bool in_cone_2d(const Pair& A, const Pair& B, const Pair& v, bool strict) {
    Int o = det2(A, B);
    if (o == 0)
        throw error(errc::degenerate_cone, "two-dimensional test on a degenerate cone");
    Int s1 = det2(A, v) * o;
    Int s2 = det2(v, B) * o;
    if (strict)
        return s1 > 0 && s2 > 0;
    return s1 >= 0 && s2 >= 0;
}

} // namespace detail

// Coordinates (s, t) of a plane point m = s b1 + t b2; rejects points off the
// plane. cross(b1, b2) = +-w, so s and t fall out of cross products with m.
inline Pair plane_coords(const PlaneCone& cone, const Vec3& m) {
    if (dot(cone.w, m) != 0)
        throw error(errc::internal_error, "point is not on the cone's plane");
    Vec3 c = cross(cone.b1, cone.b2);
    std::size_t i = 0;
    while (i < 3 && c[i] == 0)
        ++i;
    Vec3 sm = cross(m, cone.b2);
    Vec3 tm = cross(cone.b1, m);
    if (sm[i] % c[i] != 0 || tm[i] % c[i] != 0)
        throw error(errc::internal_error, "point is not a lattice point of the plane");
    Pair st{sm[i] / c[i], tm[i] / c[i]};
    if (cone.b1 * st[0] + cone.b2 * st[1] != m)
        throw error(errc::internal_error, "plane coordinate solve failed");
    return st;
}

// Slice of the nonnegative octant by the plane w-perp. Requires w to have
// both a positive and a negative entry; the slice is then a two-dimensional
// cone whose extreme rays lie on coordinate planes. The first ray slot holds
// the lexicographically larger ray. The stored normal is the primitive
// vector along w.
inline PlaneCone octant_slice(const Vec3& w_in) {
    bool has_pos = w_in[0] > 0 || w_in[1] > 0 || w_in[2] > 0;
    bool has_neg = w_in[0] < 0 || w_in[1] < 0 || w_in[2] < 0;
    if (!has_pos || !has_neg)
        throw error(errc::degenerate_slice,
                    "weight difference " + to_string(w_in) + " does not cut the octant in a plane");
    Vec3 w = primitive(w_in);

    std::vector<Vec3> rays;
    auto add = [&](Vec3 d) {
        if (d.is_zero())
            return;
        if (d[0] <= 0 && d[1] <= 0 && d[2] <= 0)
            d = -d;
        if (!d.nonnegative())
            return;
        d = primitive(d);
        if (std::find(rays.begin(), rays.end(), d) == rays.end())
            rays.push_back(d);
    };
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        Vec3 d;
        d[i] = w[j];
        d[j] = -w[i];
        d[k] = 0;
        add(d);
    }
    if (rays.size() != 2)
        throw error(errc::internal_error, "octant slice did not produce two extreme rays");
    if (lex_less(rays[0], rays[1]))
        std::swap(rays[0], rays[1]);

    // Lattice basis of w-perp: b1 kills the first two coordinates' part,
    // b2 reaches the remaining third-coordinate quotient.
    Int g12, alpha, beta;
    detail::extended_gcd(w[0], w[1], g12, alpha, beta);
    PlaneCone cone;
    cone.w = w;
    cone.ray = {rays[0], rays[1]};
    if (g12 == 0) {
        // w = (0, 0, w3) never gets here: it has no mixed signs.
        throw error(errc::internal_error, "unreachable: first two weight entries both zero");
    }
    Int g = gcd(g12, w[2]);
    cone.b1 = Vec3{-w[1] / g12, w[0] / g12, 0};
    cone.b2 = Vec3{-alpha * w[2] / g, -beta * w[2] / g, g12 / g};
    Vec3 c = cross(cone.b1, cone.b2);
    if (c != w && c != -w)
        throw error(errc::internal_error, "plane basis does not span w-perp");
    return cone;
}

// Split a cone at an interior lattice ray into the side where <m, u> <=
// <m, v> (returned first) and the side where <m, v> <= <m, u>. The ray must
// lie in the cone and satisfy <ray, u> = <ray, v>. When the ray sits on a
// boundary ray of the cone, that side degenerates to the ray itself and the
// other side is the whole cone. Each half keeps its boundary ray in the slot
// it occupied in the parent, with the dividing ray in the other slot.
struct ConeSplit {
    PlaneCone first;  // <m, u> <= <m, v>
    PlaneCone second; // <m, v> <= <m, u>
};

inline ConeSplit subdivide_along(const PlaneCone& cone, const Vec3& ray, const Vec3& u,
                                 const Vec3& v) {
    if (cone.degenerate)
        throw error(errc::degenerate_cone, "cannot subdivide a single-ray cone");
    if (dot(cone.w, ray) != 0)
        throw error(errc::ray_not_in_cone,
                    "dividing ray " + to_string(ray) + " is not on the cone's plane");
    Pair A = plane_coords(cone, cone.ray[0]);
    Pair B = plane_coords(cone, cone.ray[1]);
    Pair R = plane_coords(cone, ray);
    if (!detail::in_cone_2d(A, B, R, false))
        throw error(errc::ray_not_in_cone,
                    "dividing ray " + to_string(ray) + " lies outside the cone");
    Vec3 d = u - v;
    if (dot(ray, d) != 0)
        throw error(errc::not_on_dividing_line,
                    "ray " + to_string(ray) + " does not balance the two orders");

    Vec3 np = primitive(ray);
    Int s0 = dot(cone.ray[0], d);
    Int s1 = dot(cone.ray[1], d);

    auto make = [&](const Vec3& first_ray, const Vec3& second_ray, bool degen) {
        PlaneCone half = cone;
        half.ray = {first_ray, second_ray};
        half.degenerate = degen;
        return half;
    };

    ConeSplit split;
    if (np == cone.ray[0] || np == cone.ray[1]) {
        bool on_first = (np == cone.ray[0]);
        Int other = on_first ? s1 : s0;
        if (other == 0)
            throw error(errc::internal_error, "order difference vanishes on the whole cone");
        PlaneCone whole = make(cone.ray[0], cone.ray[1], false);
        PlaneCone point = make(np, np, true);
        if (other < 0) {
            split.first = whole;
            split.second = point;
        } else {
            split.first = point;
            split.second = whole;
        }
        return split;
    }

    if (s0 == 0 || s1 == 0 || (s0 < 0) == (s1 < 0))
        throw error(errc::internal_error,
                    "order difference does not separate the boundary rays");
    if (s0 < 0) {
        split.first = make(cone.ray[0], np, false);
        split.second = make(np, cone.ray[1], false);
    } else {
        split.first = make(np, cone.ray[1], false);
        split.second = make(cone.ray[0], np, false);
    }
    return split;
}

namespace detail {

// Hilbert basis of the 2D cone spanned by primitive A, B with det(A, B) > 0,
// listed from A to B: reduce A to (1, 0), shear B into the upper half plane,
// then run the continued fraction recurrence w_{i+1} = a_i w_i - w_{i-1}.
inline std::vector<Pair> hilbert_basis_2d(const Pair& A, const Pair& B) {
    Int q = det2(A, B);
    if (q <= 0)
        throw error(errc::internal_error, "Hilbert basis requires positive orientation");
    Int g, x, y;
    extended_gcd(A[0], A[1], g, x, y);
    if (g != 1)
        throw error(errc::internal_error, "Hilbert basis requires primitive rays");
    // M = [[x, y], [-A2, A1]] has det 1 and sends A to (1, 0).
    auto apply_m = [&](const Pair& p) { return Pair{x * p[0] + y * p[1], -A[1] * p[0] + A[0] * p[1]}; };
    auto unapply_m = [&](const Pair& p) { return Pair{A[0] * p[0] - y * p[1], A[1] * p[0] + x * p[1]}; };
    Pair Bm = apply_m(B);
    if (Bm[1] != q)
        throw error(errc::internal_error, "unimodular reduction lost the orientation");
    Int k = floor_div(Bm[0], q);
    Int p0 = Bm[0] - k * q;

    std::vector<Pair> points;
    if (q == 1) {
        points = {{1, 0}, {0, 1}};
    } else {
        // gcd(p0, q) = 1 and q > 1 force p0 >= 1, so (1, 1) is the second
        // basis point and a = ceil(num/den) keeps den strictly decreasing.
        std::vector<Int> quotients;
        Int num = q, den = q - p0;
        while (den != 0) {
            Int a = (num + den - 1) / den;
            Int next = a * den - num;
            quotients.push_back(a);
            num = den;
            den = next;
        }
        points = {{1, 0}, {1, 1}};
        for (const Int& a : quotients) {
            Pair w1 = points[points.size() - 1];
            Pair w0 = points[points.size() - 2];
            points.push_back({a * w1[0] - w0[0], a * w1[1] - w0[1]});
        }
        if (points.back() != Pair{p0, q})
            throw error(errc::internal_error, "continued fraction did not reach the far ray");
    }
    for (auto& p : points) {
        p = {p[0] + k * p[1], p[1]}; // undo the shear
        p = unapply_m(p);
    }
    return points;
}

} // namespace detail

// Hilbert basis of the cone, listed sweeping from ray[0] to ray[1]. A
// degenerate cone's basis is its single ray.
inline std::vector<Vec3> hilbert_basis(const PlaneCone& cone) {
    if (cone.degenerate)
        return {cone.ray[0]};
    Pair A = plane_coords(cone, cone.ray[0]);
    Pair B = plane_coords(cone, cone.ray[1]);
    bool flipped = det2(A, B) < 0;
    if (flipped)
        std::swap(A, B);
    std::vector<Pair> points = detail::hilbert_basis_2d(A, B);
    if (flipped)
        std::reverse(points.begin(), points.end());
    std::vector<Vec3> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(cone.b1 * p[0] + cone.b2 * p[1]);
    if (out.front() != cone.ray[0] || out.back() != cone.ray[1])
        throw error(errc::internal_error, "Hilbert basis endpoints do not match the rays");
    return out;
}

// The ray of the cone on which the linear functional <., d> vanishes.
// Throws whole_plane_orthogonal when d vanishes on the entire plane and
// ray_outside_cone when the zero line misses the cone.
inline Vec3 orthogonal_ray(const PlaneCone& cone, const Vec3& d) {
    Int s = dot(cone.b2, d);
    Int t = -dot(cone.b1, d);
    if (s == 0 && t == 0)
        throw error(errc::whole_plane_orthogonal,
                    "functional vanishes on the whole plane of the cone");
    if (cone.degenerate) {
        if (dot(cone.ray[0], d) == 0)
            return cone.ray[0];
        throw error(errc::ray_outside_cone, "zero line of the functional misses the ray");
    }
    Pair A = plane_coords(cone, cone.ray[0]);
    Pair B = plane_coords(cone, cone.ray[1]);
    if (det2(A, B) == 0)
        throw error(errc::degenerate_cone, "cone rays are collinear");
    for (const Pair& choice : {Pair{s, t}, Pair{-s, -t}}) {
        if (detail::in_cone_2d(A, B, choice, false)) {
            Vec3 rho = primitive(cone.b1 * choice[0] + cone.b2 * choice[1]);
            if (dot(rho, d) != 0)
                throw error(errc::internal_error, "orthogonal ray fails its defining equation");
            return rho;
        }
    }
    throw error(errc::ray_outside_cone, "zero line of the functional misses the cone");
}

} // namespace multicurve

#endif
