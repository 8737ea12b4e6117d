#include "qgr/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

MatrixShape::MatrixShape(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < m) {
        throw std::domain_error("MatrixShape: require 1 <= rows <= cols (transpose wider-than-tall inputs)");
    }
}

std::string MatrixShape::str() const {
    return "(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
}

RelationClass relation_class(VarIndex a, VarIndex b) {
    if (a == b) return RelationClass::Equal;
    if (a.row == b.row) return RelationClass::SameRow;
    if (a.col == b.col) return RelationClass::SameColumn;
    bool same_orientation = (a.row < b.row) == (a.col < b.col);
    return same_orientation ? RelationClass::Diagonal : RelationClass::Antidiagonal;
}

std::string to_string(RelationClass c) {
    switch (c) {
        case RelationClass::Equal: return "equal";
        case RelationClass::SameRow: return "same-row";
        case RelationClass::SameColumn: return "same-col";
        case RelationClass::Antidiagonal: return "antidiagonal";
        case RelationClass::Diagonal: return "diagonal";
    }
    return "?";
}

PbwMonomial monomial_from_sorted_word(const Word& word) {
    PbwMonomial mono;
    for (const VarIndex& v : word) {
        if (!mono.empty() && mono.back().first == v) {
            ++mono.back().second;
        } else {
            if (!mono.empty() && v < mono.back().first) {
                throw std::logic_error("monomial_from_sorted_word: word not sorted");
            }
            mono.emplace_back(v, 1);
        }
    }
    return mono;
}

Word word_of_monomial(const PbwMonomial& mono) {
    Word word;
    for (const auto& [v, e] : mono) {
        for (int i = 0; i < e; ++i) word.push_back(v);
    }
    return word;
}

long monomial_degree(const PbwMonomial& mono) {
    long d = 0;
    for (const auto& [v, e] : mono) d += e;
    return d;
}

std::string monomial_str(const PbwMonomial& mono) {
    if (mono.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : mono) {
        if (!first) out << "*";
        first = false;
        out << "x[" << v.row << "," << v.col << "]";
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

HWeight& HWeight::operator+=(const HWeight& rhs) {
    if (row_weights.size() != rhs.row_weights.size() || col_weights.size() != rhs.col_weights.size()) {
        throw std::domain_error("HWeight: size mismatch");
    }
    for (size_t i = 0; i < row_weights.size(); ++i) row_weights[i] += rhs.row_weights[i];
    for (size_t j = 0; j < col_weights.size(); ++j) col_weights[j] += rhs.col_weights[j];
    return *this;
}

HWeight h_weight(const PbwMonomial& mono, const MatrixShape& shape) {
    HWeight w{std::vector<long>(static_cast<size_t>(shape.rows), 0),
              std::vector<long>(static_cast<size_t>(shape.cols), 0)};
    for (const auto& [v, e] : mono) {
        w.row_weights[static_cast<size_t>(v.row - 1)] += e;
        w.col_weights[static_cast<size_t>(v.col - 1)] += e;
    }
    return w;
}

Element Element::zero(MatrixShape shape, std::optional<Partition> restriction) {
    return Element(shape, std::move(restriction));
}

Element Element::one(MatrixShape shape, std::optional<Partition> restriction) {
    Element e(shape, std::move(restriction));
    e.add_term({}, LaurentQ(1));
    return e;
}

Element Element::generator(VarIndex v, MatrixShape shape, std::optional<Partition> restriction) {
    if (!index_in_algebra(v, shape, restriction)) {
        throw std::domain_error("Element::generator: index outside shape or partition");
    }
    Element e(shape, std::move(restriction));
    e.add_term({{v, 1}}, LaurentQ(1));
    return e;
}

LaurentQ Element::coeff(const PbwMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? LaurentQ() : it->second;
}

void Element::add_term(const PbwMonomial& mono, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void require_compatible(const Element& a, const Element& b) {
    if (!(a.shape() == b.shape())) throw std::domain_error("Element: shape mismatch");
    if (a.restriction() != b.restriction()) throw std::domain_error("Element: partition restriction mismatch");
}

} // namespace

Element& Element::operator+=(const Element& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

Element operator*(const LaurentQ& c, const Element& e) {
    Element out(e.shape_, e.restriction_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : e.terms_) out.add_term(mono, c * coeff);
    return out;
}

std::optional<HWeight> Element::homogeneous_weight() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<HWeight> weight;
    for (const auto& [mono, c] : terms_) {
        HWeight w = h_weight(mono, shape_);
        if (!weight) {
            weight = std::move(w);
        } else if (!(*weight == w)) {
            return std::nullopt;
        }
    }
    return weight;
}

std::map<PbwMonomial, Rational> Element::at_q_one() const {
    std::map<PbwMonomial, Rational> out;
    for (const auto& [mono, c] : terms_) {
        Rational v = c.at_q_one();
        if (v != 0) out.emplace(mono, v);
    }
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        auto single = c.as_single_term();
        bool negative = single && single->first < 0;
        LaurentQ display = negative ? -c : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono_text = monomial_str(mono);
        if (display.is_one()) {
            out << mono_text;
        } else if (mono.empty()) {
            bool lone = terms_.size() == 1;
            out << (display.as_single_term() || lone ? display.str() : "(" + display.str() + ")");
        } else if (display.as_single_term()) {
            out << display.str() << "*" << mono_text;
        } else {
            out << "(" << display.str() << ")*" << mono_text;
        }
    }
    return out.str();
}

bool index_in_algebra(VarIndex v, const MatrixShape& shape, const std::optional<Partition>& restriction) {
    if (v.row < 1 || v.row > shape.rows || v.col < 1 || v.col > shape.cols) return false;
    if (restriction && v.col > restriction->part(v.row)) return false;
    return true;
}

Element normal_form(const Word& word, const LaurentQ& scalar, MatrixShape shape,
                    std::optional<Partition> restriction) {
    for (const VarIndex& v : word) {
        if (!index_in_algebra(v, shape, restriction)) {
            throw std::domain_error("normal_form: index outside shape or partition");
        }
    }

    Element result(shape, std::move(restriction));
    if (scalar.is_zero()) return result;

    struct Term {
        LaurentQ scalar;
        Word word;
    };
    std::vector<Term> work;
    work.push_back({scalar, word});
    const LaurentQ q_inv = LaurentQ::q_power(-1);
    const LaurentQ minus_hook = -q_minus_qinv();

    long steps = 0;
    while (!work.empty()) {
        if (++steps > 200'000'000L) throw std::logic_error("normal_form: rewriting did not terminate");
        Term t = std::move(work.back());
        work.pop_back();

        size_t k = 0;
        bool sorted = true;
        for (; k + 1 < t.word.size(); ++k) {
            if (t.word[k + 1] < t.word[k]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            result.add_term(monomial_from_sorted_word(t.word), t.scalar);
            continue;
        }

        VarIndex hi = t.word[k];
        VarIndex lo = t.word[k + 1];
        switch (relation_class(lo, hi)) {
            case RelationClass::SameRow:
            case RelationClass::SameColumn: {
                std::swap(t.word[k], t.word[k + 1]);
                t.scalar *= q_inv;
                work.push_back(std::move(t));
                break;
            }
            case RelationClass::Antidiagonal: {
                std::swap(t.word[k], t.word[k + 1]);
                work.push_back(std::move(t));
                break;
            }
            case RelationClass::Diagonal: {
                // hi*lo = lo*hi - (q - q^-1) x_{lo.row, hi.col} x_{hi.row, lo.col}
                Term extra = t;
                extra.scalar *= minus_hook;
                extra.word[k] = {lo.row, hi.col};
                extra.word[k + 1] = {hi.row, lo.col};
                std::swap(t.word[k], t.word[k + 1]);
                work.push_back(std::move(t));
                work.push_back(std::move(extra));
                break;
            }
            case RelationClass::Equal:
                throw std::logic_error("normal_form: equal letters cannot invert");
        }
    }
    return result;
}

Element normal_form_any(const Word& word, const LaurentQ& scalar, int rows, int cols) {
    if (rows <= cols) return normal_form(word, scalar, MatrixShape(rows, cols));
    Word transposed;
    transposed.reserve(word.size());
    for (const VarIndex& v : word) transposed.push_back({v.col, v.row});
    return normal_form(transposed, scalar, MatrixShape(cols, rows));
}

Element mul(const Element& a, const Element& b) {
    require_compatible(a, b);
    Element result(a.shape(), a.restriction());
    for (const auto& [ma, ca] : a.terms()) {
        Word wa = word_of_monomial(ma);
        for (const auto& [mb, cb] : b.terms()) {
            Word word = wa;
            Word wb = word_of_monomial(mb);
            word.insert(word.end(), wb.begin(), wb.end());
            result += normal_form(word, ca * cb, a.shape(), a.restriction());
        }
    }
    return result;
}

Element rotate180(const Element& e) {
    const MatrixShape& shape = e.shape();
    Element result(shape);
    for (const auto& [mono, c] : e.terms()) {
        Word word;
        for (const VarIndex& v : word_of_monomial(mono)) {
            word.push_back({shape.rows + 1 - v.row, shape.cols + 1 - v.col});
        }
        result += normal_form(word, c.invert_q(), shape);
    }
    return result;
}

std::vector<VarIndex> algebra_variables(MatrixShape shape, const std::optional<Partition>& restriction) {
    std::vector<VarIndex> vars;
    for (int i = 1; i <= shape.rows; ++i) {
        for (int j = 1; j <= shape.cols; ++j) {
            VarIndex v{i, j};
            if (index_in_algebra(v, shape, restriction)) vars.push_back(v);
        }
    }
    return vars;
}

long graded_dimension(MatrixShape shape, const std::optional<Partition>& restriction, int degree) {
    if (degree < 0) throw std::domain_error("graded_dimension: negative degree");
    size_t v = algebra_variables(shape, restriction).size();
    if (degree == 0) return 1;
    if (v == 0) return 0;
    // Count monomials by distributing the degree over the variables.
    std::vector<long> counts(static_cast<size_t>(degree) + 1, 0);
    counts[0] = 1;
    for (size_t var = 0; var < v; ++var) {
        for (int d = 1; d <= degree; ++d) {
            counts[static_cast<size_t>(d)] += counts[static_cast<size_t>(d - 1)];
        }
    }
    return counts[static_cast<size_t>(degree)];
}

} // namespace qgr
