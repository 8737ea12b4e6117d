#include "qgr/linalg.hpp"

#include <stdexcept>

namespace qgr {

namespace {

size_t col_count(const RfMatrix& a) {
    return a.empty() ? 0 : a.front().size();
}

// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<size_t> echelonize(RfMatrix& a) {
    size_t rows = a.size();
    size_t cols = col_count(a);
    for (const auto& row : a) {
        if (row.size() != cols) throw std::domain_error("linalg: ragged matrix");
    }
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t found = rows;
        for (size_t r = pivot_row; r < rows; ++r) {
            if (!a[r][col].is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        std::swap(a[pivot_row], a[found]);
        RatFuncQ inv = a[pivot_row][col].inverse();
        for (size_t c = col; c < cols; ++c) a[pivot_row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][col].is_zero()) continue;
            RatFuncQ factor = a[r][col];
            for (size_t c = col; c < cols; ++c) {
                a[r][c] -= factor * a[pivot_row][c];
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

} // namespace

LinearSolveResult solve_exact(RfMatrix a, std::vector<RatFuncQ> b) {
    size_t rows = a.size();
    size_t cols = col_count(a);
    if (b.size() != rows) throw std::domain_error("linalg: rhs size mismatch");
    for (size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    if (rows == 0) {
        // No constraints: unique only when there are no unknowns.
        return {true, cols == 0, 0, {}};
    }

    std::vector<size_t> pivots = echelonize(a);

    LinearSolveResult result;
    result.consistent = true;
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) {
            result.consistent = false; // pivot in the augmented column
            result.rank = static_cast<int>(i);
            return result;
        }
    }
    result.rank = static_cast<int>(pivots.size());
    result.unique = pivots.size() == cols;
    if (result.unique) {
        result.solution.assign(cols, RatFuncQ());
        for (size_t i = 0; i < pivots.size(); ++i) {
            result.solution[pivots[i]] = a[i][cols];
        }
    }
    return result;
}

int rank_exact(RfMatrix a) {
    if (a.empty()) return 0;
    return static_cast<int>(echelonize(a).size());
}

} // namespace qgr
