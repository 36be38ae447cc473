#pragma once

#include <numeric>
#include <vector>

#include "lambdap/rational.hpp"

namespace lambdap {

template <class Field>
using Matrix = std::vector<std::vector<Field>>;

template <class Field>
struct LinearSolveResult {
    bool consistent = true;
    std::vector<Field> particular;              // one solution when consistent
    std::vector<std::vector<Field>> nullspace;  // basis of the homogeneous solutions
};

/// Exact Gaussian elimination over a field. Pivoting is deterministic: for
/// each column, the first nonzero entry in row order wins. `row_order`
/// optionally permutes the scan order (used for dual-path cross-checks).
template <class Field>
LinearSolveResult<Field> solve_linear(Matrix<Field> a, std::vector<Field> rhs,
                                      std::vector<size_t> row_order = {}) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw Error("solve_linear: ragged matrix");
    if (rhs.size() != rows) throw Error("solve_linear: rhs size mismatch");
    if (row_order.empty()) {
        row_order.resize(rows);
        std::iota(row_order.begin(), row_order.end(), size_t{0});
    } else if (row_order.size() != rows) {
        throw Error("solve_linear: row_order size mismatch");
    }

    // permute rows up front so the pivot scan is plain top-to-bottom
    {
        Matrix<Field> pa(rows);
        std::vector<Field> pr(rows);
        for (size_t i = 0; i < rows; ++i) {
            pa[i] = std::move(a[row_order[i]]);
            pr[i] = std::move(rhs[row_order[i]]);
        }
        a = std::move(pa);
        rhs = std::move(pr);
    }

    std::vector<size_t> pivot_col;  // pivot column of each eliminated row
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        std::swap(rhs[r], rhs[pr]);
        Field inv = Field(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Field f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolveResult<Field> res;
    for (size_t i = r; i < rows; ++i) {
        if (!rhs[i].is_zero()) {
            res.consistent = false;
            return res;
        }
    }
    res.particular.assign(cols, Field(0));
    std::vector<bool> is_pivot(cols, false);
    for (size_t i = 0; i < pivot_col.size(); ++i) {
        is_pivot[pivot_col[i]] = true;
        res.particular[pivot_col[i]] = rhs[i];
    }
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Field> v(cols, Field(0));
        v[c] = Field(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

}  // namespace lambdap
