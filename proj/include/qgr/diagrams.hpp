#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgr/partition.hpp"
#include "qgr/posets.hpp"
#include "qgr/qmatrix.hpp"

namespace qgr {

/// The Young diagram of a partition is the partition itself viewed through
/// squares()/contains().
using YoungDiagram = Partition;

/// Black/white coloring of a Young diagram, row-major. true = black.
class CauchonDiagram {
public:
    CauchonDiagram(Partition shape, std::vector<bool> colors);

    [[nodiscard]] const Partition& shape() const { return shape_; }
    [[nodiscard]] const std::vector<bool>& colors() const { return colors_; }

    /// Color of the 1-based square (row, col).
    [[nodiscard]] bool black(int row, int col) const;

    [[nodiscard]] std::string bitstring() const; // row-major, '1' = black

    /// Monospaced art one row per line, black square / middle dot.
    [[nodiscard]] std::string art() const;

    friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;

private:
    Partition shape_;
    std::vector<bool> colors_;
};

/// The Cauchon condition: every black square has all squares above it black
/// or all squares to its left black (first row / first column vacuously ok).
bool is_valid(const CauchonDiagram& d);

/// Visit every valid diagram on Y_lambda exactly once, in ascending
/// row-major bitstring order (all-white first).
void for_each_diagram(const Partition& lambda, const std::function<void(const CauchonDiagram&)>& visit);

std::vector<CauchonDiagram> enumerate_diagrams(const Partition& lambda);

/// Number of valid diagrams on Y_lambda via the four-term deletion
/// recurrence, memoized behind a synchronized cache.
long long count_recurrence(const Partition& lambda);

/// Closed-form count of the H-spectrum of the quantum grassmannian
/// (Williams' formula at q = 1), evaluated exactly.
long long williams_total(int m, int n);

/// Number of black squares (the height statistic of the matching H-prime).
int black_count(const CauchonDiagram& d);

/// Positions (i,j) of the black squares: the t-generators of the ideal K_C
/// in the quantum affine space. Throws on invalid diagrams.
std::vector<VarIndex> kc_generators(const CauchonDiagram& d);

struct CellCount {
    IndexSet gamma;
    Partition lambda;
    long long count = 0;
};

/// Per-cell census of H-Spec: one entry per gamma, plus the irrelevant
/// ideal; the total is cross-checked against williams_total.
struct CellCensus {
    int m = 0;
    int n = 0;
    std::vector<CellCount> cells; // ordered by (entry sum, lexicographic) gamma
    long long irrelevant = 1;
    long long total = 0;
};

/// threads = 0 uses the QGR_THREADS environment variable (default 1).
CellCensus hspec_census(int m, int n, int threads = 0);

} // namespace qgr
