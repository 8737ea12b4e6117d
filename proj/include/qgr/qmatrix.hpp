#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"
#include "qgr/partition.hpp"

namespace qgr {

/// Shape of the generic matrix; the paper's convention m <= n is enforced at
/// construction, callers with more rows than columns transpose up front (see
/// normal_form_any).
struct MatrixShape {
    int rows = 1;
    int cols = 1;

    MatrixShape(int m, int n);

    friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
    [[nodiscard]] std::string str() const;
};

/// Position (i, j) of a generator, 1-based.
struct VarIndex {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// A word is an ordered product of generators, not yet normal-formed.
using Word = std::vector<VarIndex>;

/// Commutation-relation case for an ordered pair of generator positions.
enum class RelationClass {
    Equal,
    SameRow,      // x_{ij} x_{il} = q x_{il} x_{ij}, j < l
    SameColumn,   // x_{ij} x_{kj} = q x_{kj} x_{ij}, i < k
    Antidiagonal, // commuting pair
    Diagonal,     // carries the (q - q^-1) term
};

RelationClass relation_class(VarIndex a, VarIndex b);
std::string to_string(RelationClass c);

/// Product of generators in increasing lexicographic order; exponents are
/// positive and the pair list is sorted by position.
using PbwMonomial = std::vector<std::pair<VarIndex, int>>;

PbwMonomial monomial_from_sorted_word(const Word& word);
Word word_of_monomial(const PbwMonomial& mono);
long monomial_degree(const PbwMonomial& mono);
std::string monomial_str(const PbwMonomial& mono); // "x[1,1]*x[2,2]^2"

/// Torus weight: one slot per row and per column, additive under products.
struct HWeight {
    std::vector<long> row_weights;
    std::vector<long> col_weights;

    friend bool operator==(const HWeight&, const HWeight&) = default;
    HWeight& operator+=(const HWeight& rhs);
};

HWeight h_weight(const PbwMonomial& mono, const MatrixShape& shape);

/// Element of O_q(M_{m,n}) or of a partition subalgebra A_lambda, stored in
/// the lexicographic PBW basis with Laurent-polynomial coefficients.
class Element {
public:
    Element(MatrixShape shape, std::optional<Partition> restriction = std::nullopt)
        : shape_(shape), restriction_(std::move(restriction)) {}

    static Element zero(MatrixShape shape, std::optional<Partition> restriction = std::nullopt);
    static Element one(MatrixShape shape, std::optional<Partition> restriction = std::nullopt);
    static Element generator(VarIndex v, MatrixShape shape,
                             std::optional<Partition> restriction = std::nullopt);

    [[nodiscard]] const MatrixShape& shape() const { return shape_; }
    [[nodiscard]] const std::optional<Partition>& restriction() const { return restriction_; }
    [[nodiscard]] const std::map<PbwMonomial, LaurentQ>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial (zero if absent).
    [[nodiscard]] LaurentQ coeff(const PbwMonomial& mono) const;

    void add_term(const PbwMonomial& mono, const LaurentQ& c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const LaurentQ& c, const Element& e);

    friend bool operator==(const Element& a, const Element& b) {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }

    /// Common weight of all terms; nullopt for 0 and for inhomogeneous
    /// elements.
    [[nodiscard]] std::optional<HWeight> homogeneous_weight() const;

    /// Specialization q = 1: commutative expansion with rational coefficients.
    [[nodiscard]] std::map<PbwMonomial, Rational> at_q_one() const;

    /// Canonical text, terms in monomial order:
    /// "x[1,1]*x[2,2] - (q - q^-1)*x[1,2]*x[2,1]".
    [[nodiscard]] std::string str() const;

private:
    MatrixShape shape_;
    std::optional<Partition> restriction_;
    std::map<PbwMonomial, LaurentQ> terms_;
};

/// Membership check for the declared shape and partition restriction.
bool index_in_algebra(VarIndex v, const MatrixShape& shape, const std::optional<Partition>& restriction);

/// Unique expansion of scalar * word in the PBW basis. Throws
/// std::domain_error if an index falls outside the shape or partition.
Element normal_form(const Word& word, const LaurentQ& scalar, MatrixShape shape,
                    std::optional<Partition> restriction = std::nullopt);

/// Entry point honoring the transpose convention: a word on an r x c matrix
/// with r > c is transposed entrywise into the c x r algebra.
Element normal_form_any(const Word& word, const LaurentQ& scalar, int rows, int cols);

/// Exact product in PBW normal form; shapes and restrictions must agree.
Element mul(const Element& a, const Element& b);

/// Entrywise 180-degree rotation (i, j) -> (m+1-i, n+1-j) with q -> q^{-1}
/// on coefficients; an involution whose image satisfies the inverse-parameter
/// relations.
Element rotate180(const Element& e);

/// Number of PBW monomials of total degree d over the allowed variables
/// (equals C(v + d - 1, d) for v variables).
long graded_dimension(MatrixShape shape, const std::optional<Partition>& restriction, int degree);

/// Generator positions of the algebra in lexicographic order.
std::vector<VarIndex> algebra_variables(MatrixShape shape, const std::optional<Partition>& restriction);

} // namespace qgr
