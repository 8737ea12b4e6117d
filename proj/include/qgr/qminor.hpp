#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/linalg.hpp"
#include "qgr/posets.hpp"
#include "qgr/qmatrix.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Quantum minor [I|J]: alternating sum over permutations with coefficient
/// (-q)^{l(sigma)}, returned in PBW normal form. Sizes must agree.
Element quantum_minor(const IndexSet& row_set, const IndexSet& col_set, const MatrixShape& shape);

/// Maximal minor [I] = [{1..m} | I], a generator of the quantum grassmannian.
Element maximal_minor(const IndexSet& col_set, const MatrixShape& shape);

/// Standard monomial: a weakly <=_st-increasing chain of index sets; the
/// empty chain denotes 1.
struct StdMonomial {
    std::vector<IndexSet> chain;

    StdMonomial() = default;
    explicit StdMonomial(std::vector<IndexSet> sets);

    [[nodiscard]] bool empty() const { return chain.empty(); }
    [[nodiscard]] const IndexSet& head() const;
    [[nodiscard]] std::string str() const; // "[12][34]", "1"

    friend bool operator==(const StdMonomial&, const StdMonomial&) = default;
    friend auto operator<=>(const StdMonomial& a, const StdMonomial& b) { return a.chain <=> b.chain; }
};

/// All standard monomials of the given degree (0, 1 or 2); with a floor
/// gamma, only chains whose head is >=_st gamma (the Schubert basis).
std::vector<StdMonomial> std_basis(int degree, const MatrixShape& shape,
                                   const std::optional<IndexSet>& floor = std::nullopt);

struct StraightenTerm {
    RatFuncQ coeff;
    StdMonomial chain;
};

/// Expansion as a sorted map for comparisons.
using StdExpansion = std::map<StdMonomial, RatFuncQ>;

StdExpansion to_expansion(const std::vector<StraightenTerm>& terms);

struct QuasiCommutatorResult {
    RatFuncQ c;
    std::vector<StraightenTerm> lower;
};

/// Shared per-shape cache of minor expansions and straightenings; all the
/// grassmannian-level checks run through one of these.
class Straightener {
public:
    explicit Straightener(MatrixShape shape) : shape_(shape) {}

    [[nodiscard]] const MatrixShape& shape() const { return shape_; }

    /// PBW expansion of the maximal minor [I], cached.
    const Element& minor_of(const IndexSet& col_set);

    /// The unique degree-2 standard-monomial expansion of [alpha][beta],
    /// computed by an exact linear solve in the H-weight block of the pair.
    const std::vector<StraightenTerm>& straighten(const IndexSet& alpha, const IndexSet& beta);

    /// Constant c and lower part of alpha*beta - c*beta*alpha; c is
    /// certified to be +-q^e.
    QuasiCommutatorResult quasi_commutator(const IndexSet& alpha, const IndexSet& beta);

    /// PBW re-expansion of a standard expansion (the straightening oracle).
    [[nodiscard]] std::map<PbwMonomial, RatFuncQ> expand_to_pbw(const std::vector<StraightenTerm>& terms);

    [[nodiscard]] std::map<PbwMonomial, RatFuncQ> pbw_of_element(const Element& e) const;

private:
    MatrixShape shape_;
    std::map<IndexSet, Element> minors_;
    std::map<std::pair<IndexSet, IndexSet>, std::vector<StraightenTerm>> straightenings_;
};

std::vector<StraightenTerm> straighten_product(const IndexSet& alpha, const IndexSet& beta,
                                               const MatrixShape& shape);

QuasiCommutatorResult quasi_commutator(const IndexSet& alpha, const IndexSet& beta,
                                       const MatrixShape& shape);

/// The displaced-minor generator m_{ij} of the Schubert cell of gamma;
/// (i, j) must lie in the ladder.
Element schubert_minor(const IndexSet& gamma, int ladder_row, int ladder_col, const MatrixShape& shape);

/// gamma * m_{ij} = q * m_{ij} * gamma in the quotient model (chains with
/// head not >=_st gamma deleted), for every ladder position.
CheckReport verify_gamma_normality(const IndexSet& gamma, const MatrixShape& shape, Straightener* shared = nullptr);

/// The displaced minors satisfy the quantum-matrix relation table in ladder
/// coordinates, in the same quotient model.
CheckReport verify_ladder_relations(const IndexSet& gamma, const MatrixShape& shape, Straightener* shared = nullptr);

/// Quantum graded A.S.L. axioms (3), (4), (5) at degree 2, plus the PBW
/// re-expansion soundness of every straightening.
CheckReport verify_asl(const MatrixShape& shape);

} // namespace qgr
