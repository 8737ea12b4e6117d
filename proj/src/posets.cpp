#include "qgr/posets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgr {

IndexSet::IndexSet(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1) throw std::domain_error("IndexSet: entries are positive");
        if (i > 0 && entries_[i] <= entries_[i - 1]) {
            throw std::domain_error("IndexSet: entries must be strictly increasing");
        }
    }
}

bool IndexSet::contains(int value) const {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

long IndexSet::sum() const {
    long s = 0;
    for (int e : entries_) s += e;
    return s;
}

bool IndexSet::in_shape(const MatrixShape& shape) const {
    return size() == shape.rows && (entries_.empty() || entries_.back() <= shape.cols);
}

std::string IndexSet::str() const {
    std::ostringstream out;
    out << "[";
    bool wide = !entries_.empty() && entries_.back() > 9;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (wide && i > 0) out << ",";
        out << entries_[i];
    }
    out << "]";
    return out.str();
}

bool leq_st(const IndexSet& lhs, const IndexSet& rhs) {
    if (lhs.size() != rhs.size()) throw std::domain_error("leq_st: size mismatch");
    for (int s = 0; s < lhs.size(); ++s) {
        if (lhs.entries()[static_cast<size_t>(s)] > rhs.entries()[static_cast<size_t>(s)]) return false;
    }
    return true;
}

bool lt_st(const IndexSet& lhs, const IndexSet& rhs) {
    return leq_st(lhs, rhs) && !(lhs == rhs);
}

namespace {

bool census_order(const IndexSet& a, const IndexSet& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.entries() < b.entries();
}

} // namespace

std::vector<IndexSet> all_index_sets(const MatrixShape& shape) {
    std::vector<IndexSet> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(IndexSet(current));
            return;
        }
        for (int v = next; v + remaining - 1 <= shape.cols; ++v) {
            current.push_back(v);
            self(self, v + 1, remaining - 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1, shape.rows);
    std::sort(out.begin(), out.end(), census_order);
    return out;
}

PiPoset::PiPoset(MatrixShape shape) : shape_(shape), elements_(all_index_sets(shape)) {}

std::vector<std::pair<IndexSet, IndexSet>> hasse_edges(const PiPoset& poset) {
    const auto& elems = poset.elements();
    std::vector<std::pair<IndexSet, IndexSet>> edges;
    for (const IndexSet& lower : elems) {
        for (const IndexSet& upper : elems) {
            if (!lt_st(lower, upper)) continue;
            bool cover = true;
            for (const IndexSet& mid : elems) {
                if (lt_st(lower, mid) && lt_st(mid, upper)) {
                    cover = false;
                    break;
                }
            }
            if (cover) edges.emplace_back(lower, upper);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return census_order(a.first, b.first);
        return census_order(a.second, b.second);
    });
    return edges;
}

std::vector<IndexSet> pi_ideal_for_gamma(const IndexSet& gamma, const MatrixShape& shape) {
    if (!gamma.in_shape(shape)) throw std::domain_error("pi_ideal_for_gamma: gamma not in Pi_{m,n}");
    std::vector<IndexSet> out;
    for (const IndexSet& alpha : all_index_sets(shape)) {
        if (!leq_st(gamma, alpha)) out.push_back(alpha);
    }
    return out;
}

bool GammaCell::ladder_contains(int row, int col) const {
    for (const LadderPosition& p : ladder) {
        if (p.row == row && p.col == col) return true;
    }
    return false;
}

GammaCell gamma_to_cell(const IndexSet& gamma, const MatrixShape& shape) {
    if (!gamma.in_shape(shape)) throw std::domain_error("gamma_to_cell: gamma not in Pi_{m,n}");
    const int m = shape.rows;
    const int n = shape.cols;

    GammaCell cell;
    cell.shape = shape;
    cell.gamma = gamma;

    std::vector<int> lambda_parts;
    for (int i = 1; i <= m; ++i) {
        lambda_parts.push_back(n - m + i - gamma.entry(i));
    }
    cell.lambda = Partition(lambda_parts);

    for (int i = 1; i <= m; ++i) {
        int pivot = gamma.entry(m + 1 - i);
        for (int j = pivot + 1; j <= n; ++j) {
            if (gamma.contains(j)) continue;
            LadderPosition pos;
            pos.row = i;
            pos.col = j;
            std::vector<int> displaced;
            for (int g : gamma.entries()) {
                if (g != pivot) displaced.push_back(g);
            }
            displaced.push_back(j);
            std::sort(displaced.begin(), displaced.end());
            pos.displaced_minor = IndexSet(displaced);
            pos.young_row = m + 1 - i;
            int rank = 0; // columns outside gamma, counted from the right
            for (int c = j; c <= n; ++c) {
                if (!gamma.contains(c)) ++rank;
            }
            pos.young_col = rank;
            cell.ladder.push_back(pos);
        }
    }
    std::sort(cell.ladder.begin(), cell.ladder.end(), [](const LadderPosition& a, const LadderPosition& b) {
        return std::pair{a.row, a.col} < std::pair{b.row, b.col};
    });

    for (const IndexSet& alpha : all_index_sets(shape)) {
        if (leq_st(gamma, alpha)) cell.pi_ideal_complement.push_back(alpha);
    }

    // Cross-validation: ladder size matches |lambda|, ladder squares tile
    // Y_lambda, and the displaced sets are exactly the elements >=_st gamma
    // differing from gamma in one slot.
    if (static_cast<long>(cell.ladder.size()) != cell.lambda.total()) {
        throw std::logic_error("gamma_to_cell: ladder size != |lambda|");
    }
    for (const LadderPosition& p : cell.ladder) {
        if (!cell.lambda.contains(p.young_row, p.young_col)) {
            throw std::logic_error("gamma_to_cell: ladder square outside Y_lambda");
        }
        if (!leq_st(gamma, p.displaced_minor)) {
            throw std::logic_error("gamma_to_cell: displaced minor not above gamma");
        }
    }
    std::vector<IndexSet> one_swap_above;
    for (const IndexSet& alpha : cell.pi_ideal_complement) {
        int outside = 0;
        for (int e : alpha.entries()) {
            if (!gamma.contains(e)) ++outside;
        }
        if (outside == 1) one_swap_above.push_back(alpha);
    }
    std::vector<IndexSet> displaced_set;
    for (const LadderPosition& p : cell.ladder) displaced_set.push_back(p.displaced_minor);
    std::sort(one_swap_above.begin(), one_swap_above.end());
    std::sort(displaced_set.begin(), displaced_set.end());
    if (one_swap_above != displaced_set) {
        throw std::logic_error("gamma_to_cell: displaced minors do not match the one-swap covers");
    }

    return cell;
}

IndexSet partition_to_gamma(const Partition& lambda, const MatrixShape& shape) {
    const int m = shape.rows;
    const int n = shape.cols;
    if (!lambda.fits_in_box(m, n - m)) {
        throw std::domain_error("partition_to_gamma: lambda does not fit in the m x (n-m) box");
    }
    std::vector<int> entries;
    for (int i = 1; i <= m; ++i) entries.push_back(n - m + i - lambda.part(i));
    return IndexSet(entries);
}

namespace {

std::string dot_of_subposet(const std::vector<IndexSet>& elems, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (const IndexSet& e : elems) {
        out << "  \"" << e.str() << "\";\n";
    }
    for (const IndexSet& lower : elems) {
        for (const IndexSet& upper : elems) {
            if (!lt_st(lower, upper)) continue;
            bool cover = true;
            for (const IndexSet& mid : elems) {
                if (lt_st(lower, mid) && lt_st(mid, upper)) {
                    cover = false;
                    break;
                }
            }
            if (cover) out << "  \"" << lower.str() << "\" -> \"" << upper.str() << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const PiPoset& poset) {
    return dot_of_subposet(poset.elements(), "pi_poset");
}

std::string to_dot(const GammaCell& cell) {
    return dot_of_subposet(cell.pi_ideal_complement, "gamma_cell");
}

} // namespace qgr
