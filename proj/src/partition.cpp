#include "qgr/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::domain_error("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::domain_error("Partition: parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
    if (i < 1) throw std::domain_error("Partition: rows are 1-based");
    return i <= rows() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

long Partition::total() const {
    long sum = 0;
    for (int p : parts_) sum += p;
    return sum;
}

bool Partition::contains(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    }
    return Partition(std::move(conj));
}

bool Partition::fits_in_box(int box_rows, int box_cols) const {
    return rows() <= box_rows && (parts_.empty() || parts_[0] <= box_cols);
}

std::vector<std::pair<int, int>> Partition::squares() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(total()));
    for (int i = 1; i <= rows(); ++i) {
        for (int j = 1; j <= part(i); ++j) out.emplace_back(i, j);
    }
    return out;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

std::vector<Partition> partitions_in_box(int box_rows, int box_cols) {
    // Enumerate padded part vectors of length box_rows lexicographically;
    // trimming the zero padding hits every partition in the box exactly once.
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int row, int max_part) -> void {
        if (row > box_rows) {
            out.push_back(Partition(current));
            return;
        }
        for (int p = 0; p <= max_part; ++p) {
            current.push_back(p);
            self(self, row + 1, p);
            current.pop_back();
        }
    };
    recurse(recurse, 1, box_cols);
    return out;
}

} // namespace qgr
