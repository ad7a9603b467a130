#ifndef MULTICURVE_LINALG_HPP
#define MULTICURVE_LINALG_HPP

#include <map>
#include <vector>

#include "numeric.hpp"

namespace multicurve {

using RationalRow = std::vector<Rational>;

// Incremental exact row space: rows are kept in echelon form, keyed by pivot
// column with pivot entries normalized to 1.
class RowSpace {
public:
    std::size_t rank() const { return rows_.size(); }

    // Fully reduces v against the stored rows.
    RationalRow reduce(RationalRow v) const {
        for (const auto& [pivot, row] : rows_) {
            if (pivot >= v.size())
                break;
            if (v[pivot] == 0)
                continue;
            Rational factor = v[pivot];
            for (std::size_t j = pivot; j < v.size(); ++j)
                if (row[j] != 0)
                    v[j] -= factor * row[j];
        }
        return v;
    }

    bool contains(const RationalRow& v) const {
        RationalRow r = reduce(v);
        for (const auto& c : r)
            if (c != 0)
                return false;
        return true;
    }

    // Reduces and inserts; returns false when v was already in the span.
    bool insert(RationalRow v) {
        v = reduce(std::move(v));
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == v.size())
            return false;
        Rational inv = Rational(1) / v[pivot];
        for (std::size_t j = pivot; j < v.size(); ++j)
            if (v[j] != 0)
                v[j] *= inv;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    const std::map<std::size_t, RationalRow>& rows() const { return rows_; }

private:
    std::map<std::size_t, RationalRow> rows_;
};

inline bool row_space_contains(const RowSpace& big, const RowSpace& small) {
    for (const auto& [pivot, row] : small.rows())
        if (!big.contains(row))
            return false;
    return true;
}

inline bool row_space_equal(const RowSpace& a, const RowSpace& b) {
    return a.rank() == b.rank() && row_space_contains(a, b);
}

// Reduced row echelon form in place. Returns the pivot column of each
// surviving row; zero rows are dropped.
inline std::vector<std::size_t> rref(std::vector<RationalRow>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = row; r < m.size(); ++r) {
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j)
            if (m[row][j] != 0)
                m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (m[row][j] != 0)
                    m[r][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

// Canonical basis of {x : constraints * x = 0} in Q^ncols: one basis vector
// per free column, with 1 in the free slot and pivot slots back-solved.
inline std::vector<RationalRow> nullspace(std::vector<RationalRow> constraints, std::size_t ncols) {
    for (auto& r : constraints)
        r.resize(ncols, Rational(0));
    std::vector<std::size_t> pivots = rref(constraints);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<RationalRow> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        RationalRow v(ncols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -constraints[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace multicurve

#endif
