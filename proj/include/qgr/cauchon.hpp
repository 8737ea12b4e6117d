#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/diagrams.hpp"
#include "qgr/laurent.hpp"
#include "qgr/partition.hpp"
#include "qgr/qmatrix.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Quantum affine space / quantum torus on the t-generators of a Young
/// diagram: t_a t_b = q^{c(a,b)} t_b t_a with c(a,b) = 1 when a precedes b in
/// the same row or column, 0 for all other pairs.
class QTorus {
public:
    explicit QTorus(Partition lambda);

    [[nodiscard]] const Partition& lambda() const { return lambda_; }
    [[nodiscard]] const std::vector<VarIndex>& variables() const { return variables_; }
    [[nodiscard]] size_t variable_index(VarIndex v) const;

    /// Exponent in t_a t_b = q^{c} t_b t_a for variables a, b.
    [[nodiscard]] static int commutation(VarIndex a, VarIndex b);

private:
    Partition lambda_;
    std::vector<VarIndex> variables_; // row-major over Y_lambda
};

/// Element of the quantum torus: Laurent exponent vectors over the fixed
/// row-major variable order, with LaurentQ coefficients.
class TorusElement {
public:
    explicit TorusElement(const QTorus& torus) : lambda_(torus.lambda()), width_(torus.variables().size()) {}

    static TorusElement zero(const QTorus& torus);
    static TorusElement one(const QTorus& torus);
    static TorusElement generator(const QTorus& torus, VarIndex v, int power = 1);

    [[nodiscard]] const std::map<std::vector<int>, LaurentQ>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const LaurentQ& c);

    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement& operator-=(const TorusElement& rhs);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.lambda_ == b.lambda_ && a.terms_ == b.terms_;
    }

    /// If this is exactly t_v (coefficient 1), say so; restoration relies on
    /// it before inverting a pivot.
    [[nodiscard]] bool is_bare_generator(const QTorus& torus, VarIndex v) const;

    /// Torus weight of a homogeneous element (nullopt for 0 / mixed weights).
    /// Weight slots follow the ambient rows x columns of Y_lambda.
    [[nodiscard]] std::optional<HWeight> homogeneous_weight(const QTorus& torus) const;

    [[nodiscard]] std::string str(const QTorus& torus) const;

private:
    Partition lambda_;
    size_t width_;
    std::map<std::vector<int>, LaurentQ> terms_;
};

/// Exact product; q-powers collected via the commutation matrix.
TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const QTorus& torus);

/// Inverse of a Laurent monomial (single-term element).
TorusElement torus_monomial_inverse(const TorusElement& a, const QTorus& torus);

/// The deleting-derivations step ladder E (ascending lexicographic), without
/// the terminal marker (m, lambda_m + 1).
std::vector<std::pair<int, int>> restoration_steps(const Partition& lambda);

struct RestoredMatrix {
    Partition lambda;
    /// Final x^{(m, lambda_m + 1)} entries, keyed by (row, col).
    std::map<std::pair<int, int>, TorusElement> entries;
};

/// Run the restoration-of-derivations recursion from t's up to the original
/// generators, entirely inside the quantum torus.
RestoredMatrix restore(const Partition& lambda);

/// Check that the restored generators satisfy every defining relation of
/// A_lambda with zero residual.
CheckReport verify_restored_relations(const Partition& lambda);

/// Element of the localization A_lambda[y^{-1}] at y = x_{m, lambda_m},
/// written as sums of (PBW monomial without y) * y^k with integer k.
class LocalizedElement {
public:
    LocalizedElement(MatrixShape shape, Partition lambda)
        : shape_(shape), lambda_(std::move(lambda)) {}

    [[nodiscard]] const MatrixShape& shape() const { return shape_; }
    [[nodiscard]] const Partition& lambda() const { return lambda_; }
    [[nodiscard]] const std::map<std::pair<PbwMonomial, long>, LaurentQ>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const PbwMonomial& mono, long ypow, const LaurentQ& c);

    LocalizedElement& operator+=(const LocalizedElement& rhs);
    LocalizedElement& operator-=(const LocalizedElement& rhs);
    friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) { return a += b; }
    friend LocalizedElement operator-(LocalizedElement a, const LocalizedElement& b) { return a -= b; }
    friend LocalizedElement operator*(const LaurentQ& c, const LocalizedElement& e);
    friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
        return a.lambda_ == b.lambda_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string str() const;

private:
    MatrixShape shape_;
    Partition lambda_;
    std::map<std::pair<PbwMonomial, long>, LaurentQ> terms_;
};

/// Context for the localization of A_lambda at x_{m, lambda_m}.
class Localization {
public:
    explicit Localization(Partition lambda);

    [[nodiscard]] const Partition& lambda() const { return lambda_; }
    [[nodiscard]] const MatrixShape& shape() const { return shape_; }
    [[nodiscard]] VarIndex pivot() const { return pivot_; } // y

    [[nodiscard]] LocalizedElement zero() const { return LocalizedElement(shape_, lambda_); }
    [[nodiscard]] LocalizedElement one() const;
    [[nodiscard]] LocalizedElement generator(VarIndex v) const;
    [[nodiscard]] LocalizedElement y_power(long k) const;
    [[nodiscard]] LocalizedElement embed(const Element& e) const;

    /// Exact product in the localized normal form. The inverse-pushing rule
    /// is derived on the fly from the defining relations.
    [[nodiscard]] LocalizedElement mul(const LocalizedElement& a, const LocalizedElement& b) const;

private:
    Partition lambda_;
    MatrixShape shape_;
    VarIndex pivot_;
};

/// One forward deleting-derivations step at x_{m, lambda_m}: builds the
/// images x' and y inside the localization, checks the A_{lambda'} relations
/// and the sigma conjugation rule, and the recovery of the original
/// generators.
CheckReport single_step_deletion(const Partition& lambda);

struct HPrimeLabel {
    std::string label; // "<lambda parts>/<row-major bitstring>"
    Partition lambda;
    std::string bitstring;
    std::vector<VarIndex> k_generators;
};

/// Canonical identifier of the H-prime J_C attached to a Cauchon diagram,
/// with the phi-image data K_C.
HPrimeLabel diagram_to_hprime_label(const CauchonDiagram& d);

} // namespace qgr
