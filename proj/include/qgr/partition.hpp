#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qgr {

/// Integer partition: weakly decreasing non-negative parts, trailing zeros
/// trimmed so equal partitions have equal representations.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    /// Part at 1-based row i; 0 beyond the last part.
    [[nodiscard]] int part(int i) const;

    /// Total number of squares.
    [[nodiscard]] long total() const;

    /// Whether the 1-based square (row, col) lies in the Young diagram.
    [[nodiscard]] bool contains(int row, int col) const;

    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] bool fits_in_box(int box_rows, int box_cols) const;

    /// Row-major square list [(1,1),(1,2),...], 1-based.
    [[nodiscard]] std::vector<std::pair<int, int>> squares() const;

    [[nodiscard]] std::string str() const; // "(2,1)"

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions fitting in a box, every one exactly once, in a fixed
/// deterministic order (lexicographic by part vector).
std::vector<Partition> partitions_in_box(int box_rows, int box_cols);

} // namespace qgr
