#include <doctest.h>

#include <map>

#include "qgr/diagrams.hpp"

using namespace qgr;

namespace {

CauchonDiagram from_bits(const Partition& lambda, const std::string& bits) {
    std::vector<bool> colors;
    for (char c : bits) colors.push_back(c == '1');
    return CauchonDiagram(lambda, colors);
}

// Brute-force oracle: filter all colorings through is_valid.
long brute_force_count(const Partition& lambda) {
    long total = lambda.total();
    long valid = 0;
    for (long mask = 0; mask < (1L << total); ++mask) {
        std::vector<bool> colors;
        for (long b = total - 1; b >= 0; --b) colors.push_back((mask >> b) & 1);
        if (is_valid(CauchonDiagram(lambda, colors))) ++valid;
    }
    return valid;
}

} // namespace

TEST_CASE("the Cauchon condition") {
    Partition box22({2, 2});
    CHECK(is_valid(from_bits(box22, "0000")));
    CHECK(is_valid(from_bits(box22, "1111")));
    CHECK_FALSE(is_valid(from_bits(box22, "0001"))); // lone black in the corner

    // Exactly 14 of the 16 colorings of the 2x2 box are valid.
    CHECK(brute_force_count(box22) == 14);

    // First row and first column are vacuously unconstrained.
    CHECK(is_valid(from_bits(Partition({3}), "101")));
    CHECK(is_valid(from_bits(Partition({1, 1, 1}), "101")));
}

TEST_CASE("enumeration yields each valid diagram exactly once, in order") {
    auto two = enumerate_diagrams(Partition({1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].bitstring() == "0");
    CHECK(two[1].bitstring() == "1");

    auto box = enumerate_diagrams(Partition({2, 2}));
    CHECK(box.size() == 14);
    for (size_t i = 0; i + 1 < box.size(); ++i) {
        CHECK(box[i].bitstring() < box[i + 1].bitstring());
    }

    auto empty = enumerate_diagrams(Partition{});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].bitstring().empty());
}

TEST_CASE("enumeration agrees with the brute-force filter") {
    for (const Partition& lambda : partitions_in_box(3, 3)) {
        auto listed = enumerate_diagrams(lambda);
        for (const CauchonDiagram& d : listed) CHECK(is_valid(d));
        CHECK(static_cast<long>(listed.size()) == brute_force_count(lambda));
    }
}

TEST_CASE("recurrence values and paper base case") {
    CHECK(count_recurrence(Partition{}) == 1);
    CHECK(count_recurrence(Partition({1})) == 2);
    CHECK(count_recurrence(Partition({1, 1})) == 4); // 1 + 2 - 1 + 2
    CHECK(count_recurrence(Partition({2, 2})) == 14);
}

TEST_CASE("recurrence equals enumeration on the 4x4 box") {
    for (const Partition& lambda : partitions_in_box(4, 4)) {
        CHECK(count_recurrence(lambda) == static_cast<long long>(enumerate_diagrams(lambda).size()));
    }
}

TEST_CASE("diagram counts are conjugation symmetric and monotone") {
    for (const Partition& lambda : partitions_in_box(4, 4)) {
        CHECK(count_recurrence(lambda) == count_recurrence(lambda.conjugate()));
    }
    for (const Partition& lambda : partitions_in_box(3, 3)) {
        long long base = count_recurrence(lambda);
        // Add one square at every addable corner that stays within reason.
        std::vector<int> parts = lambda.parts();
        parts.push_back(0);
        for (size_t row = 0; row < parts.size(); ++row) {
            std::vector<int> grown = parts;
            grown[row] += 1;
            bool decreasing = true;
            for (size_t i = 1; i < grown.size(); ++i) {
                if (grown[i] > grown[i - 1]) decreasing = false;
            }
            if (!decreasing) continue;
            CHECK(count_recurrence(Partition(grown)) >= base);
        }
    }
}

TEST_CASE("williams closed formula") {
    CHECK(williams_total(2, 4) == 34);
    CHECK(williams_total(3, 6) == 884);
    CHECK(williams_total(1, 1) == 2);
    CHECK(williams_total(1, 2) == 4);
    CHECK_THROWS_AS(williams_total(3, 2), std::domain_error);
}

TEST_CASE("census per cell and totals") {
    CellCensus c24 = hspec_census(2, 4);
    std::map<Partition, long long> by_lambda;
    for (const CellCount& cell : c24.cells) by_lambda[cell.lambda] = cell.count;
    CHECK(by_lambda[Partition{}] == 1);
    CHECK(by_lambda[Partition({1})] == 2);
    CHECK(by_lambda[Partition({2})] == 4);
    CHECK(by_lambda[Partition({1, 1})] == 4);
    CHECK(by_lambda[Partition({2, 1})] == 8);
    CHECK(by_lambda[Partition({2, 2})] == 14);
    CHECK(c24.total == 34);
    CHECK(c24.irrelevant == 1);

    CHECK(hspec_census(1, 2).total == 4);

    CellCensus c22 = hspec_census(2, 2);
    REQUIRE(c22.cells.size() == 1);
    CHECK(c22.cells[0].lambda == Partition{});
    CHECK(c22.total == 2);

    CHECK(hspec_census(3, 6).total == 884);

    // Parallel census merges deterministically.
    CellCensus parallel = hspec_census(2, 4, 4);
    CHECK(parallel.total == c24.total);
    REQUIRE(parallel.cells.size() == c24.cells.size());
    for (size_t i = 0; i < parallel.cells.size(); ++i) {
        CHECK(parallel.cells[i].gamma == c24.cells[i].gamma);
        CHECK(parallel.cells[i].count == c24.cells[i].count);
    }
}

TEST_CASE("census totals match the closed formula through n = 9") {
    for (int n = 1; n <= 9; ++n) {
        for (int m = 1; m <= n; ++m) {
            long long cells = 1;
            for (const Partition& lambda : partitions_in_box(m, n - m)) {
                cells += count_recurrence(lambda);
            }
            CHECK(cells == williams_total(m, n));
        }
    }
}

TEST_CASE("black squares and K_C generators") {
    Partition box22({2, 2});
    CHECK(black_count(from_bits(box22, "0000")) == 0);
    CHECK(black_count(from_bits(box22, "1111")) == 4);
    CHECK(black_count(from_bits(Partition({2, 1}), "110")) == 2);

    CHECK(kc_generators(from_bits(box22, "0000")).empty());
    auto all_black = kc_generators(from_bits(box22, "1111"));
    CHECK(all_black == std::vector<VarIndex>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    auto top_row = kc_generators(from_bits(box22, "1100"));
    CHECK(top_row == std::vector<VarIndex>{{1, 1}, {1, 2}});

    CHECK_THROWS_AS(kc_generators(from_bits(box22, "0001")), std::domain_error);
}

TEST_CASE("diagram art") {
    CauchonDiagram d = from_bits(Partition({2, 1}), "110");
    CHECK(d.art() == "■■\n·\n");
    CHECK_THROWS_AS(CauchonDiagram(Partition({2, 1}), std::vector<bool>(2, false)), std::domain_error);
}
