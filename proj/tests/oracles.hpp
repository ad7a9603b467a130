#ifndef MULTICURVE_TESTS_ORACLES_HPP
#define MULTICURVE_TESTS_ORACLES_HPP

// Independent cross-checks for the test suite, written against the defining
// conditions rather than the library's algorithms: polyhedron membership by
// exact LP vertex enumeration over convex combinations of the generators,
// cone membership from 2x2 minors, Hilbert bases by bounded reachability,
// graded dimensions by direct counting. Slow but sure; inputs stay
// test-sized.

#include <multicurve/multicurve.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace oracle {

using namespace multicurve;

// Solves M x = rhs for square M by Gauss-Jordan elimination; nullopt when
// singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M,
                                                         std::vector<Rational> rhs) {
    std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t r = col; r < n; ++r)
            if (M[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == n)
            return std::nullopt;
        std::swap(M[col], M[sel]);
        std::swap(rhs[col], rhs[sel]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0)
                continue;
            Rational f = M[r][col] / M[col][col];
            for (std::size_t j = col; j < n; ++j)
                M[r][j] -= f * M[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs[i] / M[i][i];
    return x;
}

namespace detail {

// Columns of the equality system  sum theta_g g + s = target, sum theta = 1:
// one column (g, 1) per generator followed by three slack columns (e_j, 0).
inline std::vector<std::array<Rational, 4>> mixing_columns(const std::vector<Vec3>& gens) {
    std::vector<std::array<Rational, 4>> cols;
    for (const auto& g : gens)
        cols.push_back({Rational(g[0]), Rational(g[1]), Rational(g[2]), Rational(1)});
    for (std::size_t j = 0; j < 3; ++j) {
        std::array<Rational, 4> col{Rational(0), Rational(0), Rational(0), Rational(0)};
        col[j] = 1;
        cols.push_back(col);
    }
    return cols;
}

// Basic solution for four chosen columns; nullopt when the columns are
// dependent or some basic value is negative.
inline std::optional<std::array<Rational, 4>> basic_solution(
    const std::vector<std::array<Rational, 4>>& cols, const std::array<std::size_t, 4>& basis,
    const std::array<Rational, 4>& rhs) {
    std::vector<std::vector<Rational>> M(4, std::vector<Rational>(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            M[r][c] = cols[basis[c]][r];
    auto x = solve_square(M, {rhs[0], rhs[1], rhs[2], rhs[3]});
    if (!x)
        return std::nullopt;
    for (const auto& value : *x)
        if (value < 0)
            return std::nullopt;
    return std::array<Rational, 4>{(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
}

inline std::array<long, 3> key3(const Vec3& v) {
    return {v[0].convert_to<long>(), v[1].convert_to<long>(), v[2].convert_to<long>()};
}

} // namespace detail

// x lies in conv(gens) + R^3_{>=0}: some convex combination of the
// generators is dominated by x coordinatewise. The feasible region of the
// equality system is a polytope whose vertices pick four of the G+3 columns,
// so enumerating all bases is a complete decision procedure.
inline bool polyhedron_member(const std::vector<Vec3>& gens, const std::array<Rational, 3>& x) {
    for (const auto& g : gens)
        if (Rational(g[0]) <= x[0] && Rational(g[1]) <= x[1] && Rational(g[2]) <= x[2])
            return true;
    auto cols = detail::mixing_columns(gens);
    std::array<Rational, 4> rhs{x[0], x[1], x[2], Rational(1)};
    std::size_t ncols = cols.size();
    for (std::size_t a = 0; a < ncols; ++a)
        for (std::size_t b = a + 1; b < ncols; ++b)
            for (std::size_t c = b + 1; c < ncols; ++c)
                for (std::size_t d = c + 1; d < ncols; ++d)
                    if (detail::basic_solution(cols, {a, b, c, d}, rhs))
                        return true;
    return false;
}

// Strict interior test: x - eps*(1,1,1) stays in the polyhedron for some
// eps > 0 exactly when x is interior. The quick phases are sound shortcuts
// (linear functionals bound the polyhedron from below; a dominated mixture
// witnesses interiority); the basis enumeration at the end is the complete
// decision, since the LP maximum of eps is attained at a vertex where eps is
// basic whenever it is positive.
inline bool interior_member(const std::vector<Vec3>& gens, const std::array<Rational, 3>& x) {
    if (gens.empty())
        return false;
    static const std::vector<Vec3> probes = {
        Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{1, 1, 1}, Vec3{2, 1, 1},
        Vec3{1, 2, 1}, Vec3{1, 1, 2}, Vec3{1, 2, 3}, Vec3{3, 2, 1}, Vec3{2, 3, 4},
        Vec3{4, 3, 2}, Vec3{1, 3, 2}, Vec3{5, 1, 2}, Vec3{2, 1, 5},
    };
    for (const auto& phi : probes) {
        Int low = dot(phi, gens[0]);
        for (const auto& g : gens)
            low = std::min(low, dot(phi, g));
        Rational value = Rational(phi[0]) * x[0] + Rational(phi[1]) * x[1] + Rational(phi[2]) * x[2];
        if (value <= Rational(low))
            return false; // phi >= low holds on the whole polyhedron
    }
    for (const auto& g : gens)
        if (Rational(g[0]) < x[0] && Rational(g[1]) < x[1] && Rational(g[2]) < x[2])
            return true;
    // Two-generator mixtures: intersect the three per-coordinate intervals
    // for the mixing weight, then verify a candidate directly.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Rational lo(0), hi(1);
            bool empty = false;
            for (std::size_t k = 0; k < 3 && !empty; ++k) {
                Rational g0(gens[i][k]);
                Rational slope = Rational(gens[j][k]) - g0;
                if (slope == 0) {
                    if (g0 >= x[k])
                        empty = true;
                } else if (slope > 0) {
                    hi = std::min(hi, Rational((x[k] - g0) / slope));
                } else {
                    lo = std::max(lo, Rational((x[k] - g0) / slope));
                }
            }
            if (empty || lo > hi)
                continue;
            Rational t = (lo + hi) / 2;
            bool inside = true;
            for (std::size_t k = 0; k < 3 && inside; ++k) {
                Rational mix = Rational(gens[i][k]) + t * (Rational(gens[j][k]) - Rational(gens[i][k]));
                if (mix >= x[k])
                    inside = false;
            }
            if (inside)
                return true;
        }
    }
    auto cols = detail::mixing_columns(gens);
    cols.push_back({Rational(1), Rational(1), Rational(1), Rational(0)});
    std::size_t eps = cols.size() - 1;
    std::array<Rational, 4> rhs{x[0], x[1], x[2], Rational(1)};
    for (std::size_t a = 0; a + 2 < eps; ++a)
        for (std::size_t b = a + 1; b + 1 < eps; ++b)
            for (std::size_t c = b + 1; c < eps; ++c) {
                auto sol = detail::basic_solution(cols, {a, b, c, eps}, rhs);
                if (sol && (*sol)[3] > 0)
                    return true;
            }
    return false;
}

// Least mu with mu*(1,1,1) in the polyhedron; the monomial log canonical
// threshold is its reciprocal. Same vertex enumeration, minimizing mu over
// all feasible bases of (mu, theta, s).
inline Rational entry_scale(const std::vector<Vec3>& gens) {
    std::vector<std::array<Rational, 4>> cols;
    cols.push_back({Rational(-1), Rational(-1), Rational(-1), Rational(0)});
    for (const auto& col : detail::mixing_columns(gens))
        cols.push_back(col);
    std::array<Rational, 4> rhs{Rational(0), Rational(0), Rational(0), Rational(1)};
    std::optional<Rational> best;
    std::size_t ncols = cols.size();
    for (std::size_t a = 0; a < ncols; ++a)
        for (std::size_t b = a + 1; b < ncols; ++b)
            for (std::size_t c = b + 1; c < ncols; ++c)
                for (std::size_t d = c + 1; d < ncols; ++d) {
                    auto sol = detail::basic_solution(cols, {a, b, c, d}, rhs);
                    if (!sol)
                        continue;
                    Rational mu = (a == 0) ? (*sol)[0] : Rational(0);
                    if (!best || mu < *best)
                        best = mu;
                }
    if (!best)
        throw error(errc::internal_error, "entry scale search found no feasible vertex");
    return *best;
}

// Expresses m as alpha*r1 + beta*r2 when the rays are independent, solving
// from an invertible 2x2 minor and checking the remaining row; nullopt when
// the rays are collinear or m is outside their plane.
inline std::optional<std::array<Rational, 2>> ray_combination(const Vec3& r1, const Vec3& r2,
                                                              const Vec3& m) {
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t j = (i + 1) % 3;
        Int det = r1[i] * r2[j] - r1[j] * r2[i];
        if (det == 0)
            continue;
        Rational alpha = Rational(m[i] * r2[j] - m[j] * r2[i]) / Rational(det);
        Rational beta = Rational(r1[i] * m[j] - r1[j] * m[i]) / Rational(det);
        for (std::size_t k = 0; k < 3; ++k)
            if (alpha * Rational(r1[k]) + beta * Rational(r2[k]) != Rational(m[k]))
                return std::nullopt;
        return std::array<Rational, 2>{alpha, beta};
    }
    return std::nullopt;
}

inline bool cone_member(const Vec3& r1, const Vec3& r2, const Vec3& p) {
    auto combo = ray_combination(r1, r2, p);
    if (combo)
        return (*combo)[0] >= 0 && (*combo)[1] >= 0;
    // Collinear rays: p must be a nonnegative multiple of one of them.
    const Vec3& r = r1.is_zero() ? r2 : r1;
    if (r.is_zero())
        return p.is_zero();
    for (std::size_t i = 0; i < 3; ++i) {
        if (r[i] == 0)
            continue;
        Rational t = Rational(p[i]) / Rational(r[i]);
        if (t < 0)
            return false;
        for (std::size_t k = 0; k < 3; ++k)
            if (t * Rational(r[k]) != Rational(p[k]))
                return false;
        return true;
    }
    return false;
}

// Audits a claimed Hilbert basis: every element must lie in the cone, every
// cone lattice point with entries <= bound must be a sum of elements
// (reachability inside the target's box is complete, because partial sums of
// a decomposition of a nonnegative target never leave its box), and no
// element may decompose over the others.
inline bool hilbert_audit(const PlaneCone& cone, const std::vector<Vec3>& basis, long bound) {
    for (const auto& b : basis)
        if (b.is_zero() || !b.nonnegative() || dot(cone.w, b) != 0 ||
            !cone_member(cone.ray[0], cone.ray[1], b))
            return false;
    Vec3 box{bound, bound, bound};
    std::set<std::array<long, 3>> reach{{0, 0, 0}};
    std::vector<Vec3> queue{Vec3{0, 0, 0}};
    while (!queue.empty()) {
        Vec3 cur = queue.back();
        queue.pop_back();
        for (const auto& s : basis) {
            Vec3 next = cur + s;
            if (divides(next, box) && reach.insert(detail::key3(next)).second)
                queue.push_back(next);
        }
    }
    for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b)
            for (long c = 0; c <= bound; ++c) {
                Vec3 p{a, b, c};
                if (dot(cone.w, p) != 0 || !cone_member(cone.ray[0], cone.ray[1], p))
                    continue;
                if (!reach.count({a, b, c}))
                    return false;
            }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Vec3> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i)
                others.push_back(basis[j]);
        std::set<std::array<long, 3>> seen{{0, 0, 0}};
        std::vector<Vec3> q2{Vec3{0, 0, 0}};
        while (!q2.empty()) {
            Vec3 cur = q2.back();
            q2.pop_back();
            for (const auto& s : others) {
                Vec3 next = cur + s;
                if (!divides(next, basis[i]))
                    continue;
                if (next == basis[i])
                    return false; // rebuilt from the others: not minimal
                if (seen.insert(detail::key3(next)).second)
                    q2.push_back(next);
            }
        }
    }
    return true;
}

// Number of monomials of n-degree d, counted by direct enumeration.
inline Int monomial_count(const Weight& n, const Int& d) {
    Int count = 0;
    for (Int a = 0; a * n[0] <= d; ++a)
        for (Int b = 0; a * n[0] + b * n[1] <= d; ++b)
            if ((d - a * n[0] - b * n[1]) % n[2] == 0)
                ++count;
    return count;
}

// ---- randomized inputs ----------------------------------------------------

inline long random_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline SparsePolynomial random_polynomial(std::mt19937_64& rng, int max_terms, long max_exp,
                                          long max_den = 1) {
    SparsePolynomial f;
    int k = static_cast<int>(random_long(rng, 0, max_terms));
    for (int i = 0; i < k; ++i) {
        long c = random_long(rng, -9, 9);
        if (c == 0)
            continue;
        Exponent e{random_long(rng, 0, max_exp), random_long(rng, 0, max_exp),
                   random_long(rng, 0, max_exp)};
        f.add_term(e, Rational(c, random_long(rng, 1, max_den)));
    }
    return f;
}

inline UnivariatePolynomial uni_mul(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            Rational& slot = r[da + db];
            slot += ca * cb;
            if (slot == 0)
                r.erase(da + db);
        }
    return r;
}

// ---- process driver -------------------------------------------------------

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command capturing stdout; callers append 2>&1 to fold in
// stderr or 2>/dev/null to drop it.
inline CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        res.output.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    return res;
}

} // namespace oracle

#endif
