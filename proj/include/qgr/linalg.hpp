#pragma once

#include <vector>

#include "qgr/ratfunc.hpp"

namespace qgr {

/// Dense matrix over Q(q), row-major.
using RfMatrix = std::vector<std::vector<RatFuncQ>>;

struct LinearSolveResult {
    bool consistent = false;
    bool unique = false;
    int rank = 0;
    std::vector<RatFuncQ> solution; // valid when consistent && unique
};

/// Exact Gaussian elimination on the augmented system A x = b.
/// A has size rows x cols with rows >= 0; b has size rows.
LinearSolveResult solve_exact(RfMatrix a, std::vector<RatFuncQ> b);

/// Column rank by exact row reduction.
int rank_exact(RfMatrix a);

} // namespace qgr
