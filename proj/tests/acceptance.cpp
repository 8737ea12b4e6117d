// Acceptance suite: one line per criterion, exact checks, wall-clock budgets.
// Pass --slow to include the gated G(3,6) straightening sweep.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgr/cauchon.hpp"
#include "qgr/diagrams.hpp"
#include "qgr/posets.hpp"
#include "qgr/qminor.hpp"

using namespace qgr;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double budget_seconds)
        : number_(number), title_(std::move(title)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            problems_.push_back(detail);
        }
    }

    void finish() {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool in_budget = budget_ <= 0 || elapsed <= budget_;
        bool ok = problems_.empty() && in_budget;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_ << " ["
             << static_cast<long>(elapsed * 1000) << " ms";
        if (budget_ > 0) line << " / budget " << static_cast<long>(budget_ * 1000) << " ms";
        line << "]";
        std::cout << line.str() << "\n";
        if (!in_budget) std::cout << "       over budget\n";
        for (const std::string& p : problems_) std::cout << "       " << p << "\n";
        if (!ok) ++failures;
    }

private:
    int number_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

Word random_word(std::mt19937_64& rng, const MatrixShape& shape, int length) {
    std::uniform_int_distribution<int> row(1, shape.rows);
    std::uniform_int_distribution<int> col(1, shape.cols);
    Word word;
    for (int k = 0; k < length; ++k) word.push_back({row(rng), col(rng)});
    return word;
}

void criterion1() {
    Criterion c(1, "closed-formula counts: G(2,4) = 34, G(3,6) = 884", 2.0);
    long long g24 = williams_total(2, 4);
    long long g36 = williams_total(3, 6);
    c.expect(g24 == 34, "G(2,4) formula gave " + std::to_string(g24));
    c.expect(g36 == 884, "G(3,6) formula gave " + std::to_string(g36));
    c.finish();
}

void criterion2() {
    Criterion c(2, "enumeration = recurrence for every partition in the 4x4 box", 5.0);
    for (const Partition& lambda : partitions_in_box(4, 4)) {
        long long listed = static_cast<long long>(enumerate_diagrams(lambda).size());
        long long recur = count_recurrence(lambda);
        c.expect(listed == recur, lambda.str() + ": enumeration " + std::to_string(listed) +
                                      " vs recurrence " + std::to_string(recur));
    }
    c.finish();
}

void criterion3() {
    Criterion c(3, "box sums match the closed formula for all 1 <= m <= n <= 9", 10.0);
    for (int n = 1; n <= 9; ++n) {
        for (int m = 1; m <= n; ++m) {
            long long total = 1;
            for (const Partition& lambda : partitions_in_box(m, n - m)) {
                total += count_recurrence(lambda);
            }
            long long formula = williams_total(m, n);
            c.expect(total == formula, "(" + std::to_string(m) + "," + std::to_string(n) + "): box sum " +
                                           std::to_string(total) + " vs formula " + std::to_string(formula));
        }
    }
    c.finish();
}

void criterion4() {
    Criterion c(4, "PBW engine: 1000 associativity triples, graded dimensions, q = 1", 60.0);
    std::mt19937_64 rng(20260809);
    const MatrixShape shapes[] = {MatrixShape(2, 2), MatrixShape(2, 3), MatrixShape(2, 4),
                                  MatrixShape(3, 3), MatrixShape(3, 4)};
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const MatrixShape& shape = shapes[pick(rng)];
        Element a = normal_form(random_word(rng, shape, len(rng)), LaurentQ(1), shape);
        Element b = normal_form(random_word(rng, shape, len(rng)), q_minus_qinv(), shape);
        Element e = normal_form(random_word(rng, shape, len(rng)), LaurentQ(1), shape);
        if (!(mul(mul(a, b), e) == mul(a, mul(b, e)))) {
            c.expect(false, "associativity failed at trial " + std::to_string(trial));
            break;
        }
    }

    auto binomial = [](long n, long k) {
        long out = 1;
        for (long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
        return out;
    };
    for (const MatrixShape& shape : shapes) {
        long v = static_cast<long>(algebra_variables(shape, std::nullopt).size());
        for (int d = 0; d <= 4; ++d) {
            long got = graded_dimension(shape, std::nullopt, d);
            long want = binomial(v + d - 1, d);
            c.expect(got == want, shape.str() + " degree " + std::to_string(d) + ": " +
                                      std::to_string(got) + " vs C = " + std::to_string(want));
        }
    }

    for (int trial = 0; trial < 200; ++trial) {
        const MatrixShape& shape = shapes[pick(rng)];
        Word word = random_word(rng, shape, len(rng) + 2);
        Element e = normal_form(word, LaurentQ(1), shape);
        Word sorted = word;
        std::sort(sorted.begin(), sorted.end());
        std::map<PbwMonomial, Rational> expected{{monomial_from_sorted_word(sorted), rational(1)}};
        if (!(e.at_q_one() == expected)) {
            c.expect(false, "q = 1 specialization mismatch at trial " + std::to_string(trial));
            break;
        }
    }
    c.finish();
}

void criterion5(bool slow) {
    std::string title = "A.S.L. axioms (3), (4), (5) and straightening soundness on G(2,4), G(2,5)";
    if (slow) title += ", G(3,6)";
    Criterion c(5, title, 120.0);
    for (const MatrixShape& shape : {MatrixShape(2, 4), MatrixShape(2, 5)}) {
        CheckReport report = verify_asl(shape);
        c.expect(report.ok(), shape.str() + ": " + std::to_string(report.failures.size()) + " failures");
    }
    if (slow) {
        CheckReport report = verify_asl(MatrixShape(3, 6));
        c.expect(report.ok(), "(3,6): " + std::to_string(report.failures.size()) + " failures");
    }
    c.finish();
}

void criterion6() {
    Criterion c(6, "Schubert cells of G(2,4): gamma-normality and ladder relation table", 60.0);
    MatrixShape shape(2, 4);
    Straightener shared(shape);
    for (const IndexSet& gamma : all_index_sets(shape)) {
        CheckReport normality = verify_gamma_normality(gamma, shape, &shared);
        c.expect(normality.ok(), "gamma-normality failed at " + gamma.str());
        CheckReport ladder = verify_ladder_relations(gamma, shape, &shared);
        c.expect(ladder.ok(), "ladder relations failed at " + gamma.str());
    }
    c.finish();
}

void criterion7() {
    Criterion c(7, "ladder example: gamma = (1,3,6) in (3,7) gives lambda = (4,3,1)", 0);
    GammaCell cell = gamma_to_cell(IndexSet{1, 3, 6}, MatrixShape(3, 7));
    c.expect(cell.lambda == Partition({4, 3, 1}), "lambda = " + cell.lambda.str());
    std::set<std::pair<int, int>> expected{{1, 7}, {2, 4}, {2, 5}, {2, 7}, {3, 2}, {3, 4}, {3, 5}, {3, 7}};
    std::set<std::pair<int, int>> actual;
    for (const LadderPosition& p : cell.ladder) actual.emplace(p.row, p.col);
    c.expect(actual == expected, "ladder generator set differs from the worked example");
    c.finish();
}

void criterion8() {
    Criterion c(8, "restoration: zero residuals on the 3x3 box; quasi-determinant entry at (2,2)", 30.0);
    for (const Partition& lambda : partitions_in_box(3, 3)) {
        if (lambda.empty()) continue;
        CheckReport report = verify_restored_relations(lambda);
        c.expect(report.ok(), lambda.str() + ": " + std::to_string(report.failures.size()) +
                                  " nonzero residuals");
    }

    Partition box({2, 2});
    QTorus torus(box);
    RestoredMatrix restored = restore(box);
    TorusElement expected = TorusElement::generator(torus, {1, 1});
    expected += torus_mul(torus_mul(TorusElement::generator(torus, {1, 2}),
                                    TorusElement::generator(torus, {2, 2}, -1), torus),
                          TorusElement::generator(torus, {2, 1}), torus);
    c.expect(restored.entries.at({1, 1}) == expected, "x11 != t11 + t12 t22^-1 t21");
    c.finish();
}

void criterion9() {
    Criterion c(9, "single-step deletion: A_lambda' relations and the sigma rule", 60.0);
    for (const Partition& lambda : {Partition({2, 2}), Partition({3, 3}), Partition({2, 2, 2})}) {
        CheckReport report = single_step_deletion(lambda);
        c.expect(report.ok(),
                 lambda.str() + ": " + std::to_string(report.failures.size()) + " failures");
    }
    c.finish();
}

void criterion10() {
    Criterion c(10, "Pi_{3,6} poset golden: 20 nodes, figure cover relation, byte-stable DOT", 0);
    MatrixShape shape(3, 6);
    PiPoset poset(shape);
    c.expect(poset.elements().size() == 20, "node count " + std::to_string(poset.elements().size()));

    // Cover relation of the figure, transcribed once by hand: pairs are
    // (lower, upper).
    const int fixture[][6] = {
        {3, 5, 6, 4, 5, 6}, {3, 4, 6, 3, 5, 6}, {2, 5, 6, 3, 5, 6}, {3, 4, 5, 3, 4, 6},
        {2, 4, 6, 3, 4, 6}, {2, 4, 6, 2, 5, 6}, {1, 5, 6, 2, 5, 6}, {2, 4, 5, 3, 4, 5},
        {2, 4, 5, 2, 4, 6}, {2, 3, 6, 2, 4, 6}, {1, 4, 6, 2, 4, 6}, {1, 4, 6, 1, 5, 6},
        {2, 3, 5, 2, 4, 5}, {1, 4, 5, 2, 4, 5}, {2, 3, 5, 2, 3, 6}, {1, 3, 6, 2, 3, 6},
        {1, 4, 5, 1, 4, 6}, {1, 3, 6, 1, 4, 6}, {2, 3, 4, 2, 3, 5}, {1, 3, 5, 2, 3, 5},
        {1, 3, 5, 1, 4, 5}, {1, 3, 5, 1, 3, 6}, {1, 2, 6, 1, 3, 6}, {1, 3, 4, 2, 3, 4},
        {1, 3, 4, 1, 3, 5}, {1, 2, 5, 1, 3, 5}, {1, 2, 5, 1, 2, 6}, {1, 2, 4, 1, 3, 4},
        {1, 2, 4, 1, 2, 5}, {1, 2, 3, 1, 2, 4},
    };
    std::set<std::pair<IndexSet, IndexSet>> expected;
    for (const auto& row : fixture) {
        expected.emplace(IndexSet{row[0], row[1], row[2]}, IndexSet{row[3], row[4], row[5]});
    }
    auto edges = hasse_edges(poset);
    std::set<std::pair<IndexSet, IndexSet>> actual(edges.begin(), edges.end());
    c.expect(actual == expected, "cover relation differs from the figure (computed " +
                                     std::to_string(actual.size()) + " covers, fixture " +
                                     std::to_string(expected.size()) + ")");

    std::string dot1 = to_dot(poset);
    std::string dot2 = to_dot(PiPoset(shape));
    c.expect(dot1 == dot2, "DOT output is not byte-stable");
    for (const auto& [lower, upper] : expected) {
        std::string needle = "\"" + lower.str() + "\" -> \"" + upper.str() + "\"";
        if (dot1.find(needle) == std::string::npos) {
            c.expect(false, "DOT missing cover " + needle);
            break;
        }
    }
    c.finish();
}

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;
    }

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5(slow);
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
