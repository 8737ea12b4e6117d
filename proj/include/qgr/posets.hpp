#pragma once

#include <string>
#include <vector>

#include "qgr/partition.hpp"
#include "qgr/qmatrix.hpp"

namespace qgr {

/// Strictly increasing m-subset of {1..n}; indexes a maximal quantum minor.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> entries);
    IndexSet(std::initializer_list<int> entries) : IndexSet(std::vector<int>(entries)) {}

    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
    [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] int entry(int s) const { return entries_.at(static_cast<size_t>(s - 1)); } // 1-based
    [[nodiscard]] bool contains(int value) const;
    [[nodiscard]] long sum() const;

    /// Validity inside Pi_{m,n}.
    [[nodiscard]] bool in_shape(const MatrixShape& shape) const;

    [[nodiscard]] std::string str() const; // "[135]" (comma-separated past 9)

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

/// Componentwise partial order <=_st on index sets of equal size.
bool leq_st(const IndexSet& lhs, const IndexSet& rhs);
bool lt_st(const IndexSet& lhs, const IndexSet& rhs);

/// All elements of Pi_{m,n}, ordered by (sum of entries, lexicographic) for
/// deterministic output.
std::vector<IndexSet> all_index_sets(const MatrixShape& shape);

/// The poset (Pi_{m,n}, <=_st).
class PiPoset {
public:
    explicit PiPoset(MatrixShape shape);

    [[nodiscard]] const MatrixShape& shape() const { return shape_; }
    [[nodiscard]] const std::vector<IndexSet>& elements() const { return elements_; }

private:
    MatrixShape shape_;
    std::vector<IndexSet> elements_;
};

/// Covering pairs (lower, upper) only, no transitive edges; deterministic
/// order.
std::vector<std::pair<IndexSet, IndexSet>> hasse_edges(const PiPoset& poset);

/// The Pi-ideal {alpha : alpha not >=_st gamma} (downward closed).
std::vector<IndexSet> pi_ideal_for_gamma(const IndexSet& gamma, const MatrixShape& shape);

/// Ladder position in the paper's coordinates together with its displaced
/// minor index set and its square in the rotated Young diagram.
struct LadderPosition {
    int row = 0; // i: ladder row, bottom-up (corresponds to gamma_{m+1-i})
    int col = 0; // j: matrix column
    IndexSet displaced_minor;
    int young_row = 0;
    int young_col = 0;
};

/// Schubert-cell data attached to gamma: the partition lambda with
/// lambda_i + gamma_i = n - m + i, the ladder, and the complement of the
/// Pi-ideal.
struct GammaCell {
    MatrixShape shape{1, 1};
    IndexSet gamma;
    Partition lambda;
    std::vector<LadderPosition> ladder; // sorted by (row, col)
    std::vector<IndexSet> pi_ideal_complement; // {alpha : alpha >=_st gamma}

    [[nodiscard]] bool ladder_contains(int row, int col) const;
};

GammaCell gamma_to_cell(const IndexSet& gamma, const MatrixShape& shape);

/// Inverse of the lambda(gamma) correspondence.
IndexSet partition_to_gamma(const Partition& lambda, const MatrixShape& shape);

/// DOT renderings of Figure-1 style Hasse diagrams.
std::string to_dot(const PiPoset& poset);
std::string to_dot(const GammaCell& cell);

} // namespace qgr
