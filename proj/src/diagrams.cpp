#include "qgr/diagrams.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <gmpxx.h>

namespace qgr {

CauchonDiagram::CauchonDiagram(Partition shape, std::vector<bool> colors)
    : shape_(std::move(shape)), colors_(std::move(colors)) {
    if (static_cast<long>(colors_.size()) != shape_.total()) {
        throw std::domain_error("CauchonDiagram: color count != |lambda|");
    }
}

bool CauchonDiagram::black(int row, int col) const {
    if (!shape_.contains(row, col)) {
        throw std::domain_error("CauchonDiagram: square outside the diagram");
    }
    size_t index = 0;
    for (int r = 1; r < row; ++r) index += static_cast<size_t>(shape_.part(r));
    index += static_cast<size_t>(col - 1);
    return colors_[index];
}

std::string CauchonDiagram::bitstring() const {
    std::string out;
    out.reserve(colors_.size());
    for (bool b : colors_) out.push_back(b ? '1' : '0');
    return out;
}

std::string CauchonDiagram::art() const {
    std::ostringstream out;
    size_t index = 0;
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = 1; c <= shape_.part(r); ++c) {
            out << (colors_[index++] ? "■" : "·");
        }
        out << "\n";
    }
    return out.str();
}

bool is_valid(const CauchonDiagram& d) {
    const Partition& shape = d.shape();
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            if (!d.black(r, c)) continue;
            bool above_black = true;
            for (int r2 = 1; r2 < r; ++r2) {
                if (!d.black(r2, c)) {
                    above_black = false;
                    break;
                }
            }
            if (above_black) continue;
            bool left_black = true;
            for (int c2 = 1; c2 < c; ++c2) {
                if (!d.black(r, c2)) {
                    left_black = false;
                    break;
                }
            }
            if (!left_black) return false;
        }
    }
    return true;
}

void for_each_diagram(const Partition& lambda, const std::function<void(const CauchonDiagram&)>& visit) {
    auto squares = lambda.squares();
    std::vector<bool> colors(squares.size(), false);
    // col_black[j]: every already-colored square of column j is black.
    std::vector<bool> col_black(static_cast<size_t>(lambda.rows() == 0 ? 0 : lambda.part(1)) + 1, true);

    auto recurse = [&](auto&& self, size_t pos, bool row_prefix_black) -> void {
        if (pos == squares.size()) {
            visit(CauchonDiagram(lambda, colors));
            return;
        }
        auto [row, col] = squares[pos];
        bool starts_row = col == 1;
        bool prefix = starts_row ? true : row_prefix_black;

        // White first: ascending bitstring order.
        colors[pos] = false;
        bool saved = col_black[static_cast<size_t>(col)];
        col_black[static_cast<size_t>(col)] = false;
        self(self, pos + 1, false);
        col_black[static_cast<size_t>(col)] = saved;

        if (col_black[static_cast<size_t>(col)] || prefix) {
            colors[pos] = true;
            self(self, pos + 1, prefix);
            colors[pos] = false;
        }
    };
    recurse(recurse, 0, true);
}

std::vector<CauchonDiagram> enumerate_diagrams(const Partition& lambda) {
    std::vector<CauchonDiagram> out;
    for_each_diagram(lambda, [&](const CauchonDiagram& d) { out.push_back(d); });
    return out;
}

namespace {

std::map<Partition, long long>& recurrence_cache() {
    static std::map<Partition, long long> cache;
    return cache;
}
std::mutex recurrence_mutex;

long long count_recurrence_locked(const Partition& lambda) {
    if (lambda.empty()) return 1;
    if (lambda.total() > 62) throw std::domain_error("count_recurrence: diagram too large for exact long long");
    auto& cache = recurrence_cache();
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    const auto& parts = lambda.parts();
    int m = lambda.rows();

    std::vector<int> all_minus;
    for (int p : parts) all_minus.push_back(p - 1);
    std::vector<int> drop_last(parts.begin(), parts.end() - 1);
    std::vector<int> drop_last_minus;
    for (int p : drop_last) drop_last_minus.push_back(p - 1);
    std::vector<int> last_minus(parts);
    last_minus[static_cast<size_t>(m - 1)] -= 1;

    long long value = count_recurrence_locked(Partition(all_minus)) +
                      count_recurrence_locked(Partition(drop_last)) -
                      count_recurrence_locked(Partition(drop_last_minus)) +
                      count_recurrence_locked(Partition(last_minus));
    cache.emplace(lambda, value);
    return value;
}

mpz_class signed_pow(long base, unsigned long exp) {
    // 0^0 = 1, matching the formula's empty-product convention.
    mpz_class result;
    mpz_class b(base);
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exp);
    return result;
}

} // namespace

long long count_recurrence(const Partition& lambda) {
    std::lock_guard<std::mutex> lock(recurrence_mutex);
    return count_recurrence_locked(lambda);
}

long long williams_total(int m, int n) {
    if (m < 1 || n < m) throw std::domain_error("williams_total: require 1 <= m <= n");
    mpz_class total = 1;
    for (int i = 0; i < m; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        mpz_class lhs = signed_pow(i - m, static_cast<unsigned long>(i)) *
                        signed_pow(m - i + 1, static_cast<unsigned long>(n - i));
        mpz_class rhs = signed_pow(i - m + 1, static_cast<unsigned long>(i)) *
                        signed_pow(m - i, static_cast<unsigned long>(n - i));
        total += binom * (lhs - rhs);
    }
    if (!total.fits_slong_p()) throw std::domain_error("williams_total: result exceeds long long");
    return total.get_si();
}

int black_count(const CauchonDiagram& d) {
    int count = 0;
    for (bool b : d.colors()) count += b ? 1 : 0;
    return count;
}

std::vector<VarIndex> kc_generators(const CauchonDiagram& d) {
    if (!is_valid(d)) throw std::domain_error("kc_generators: not a Cauchon diagram");
    std::vector<VarIndex> out;
    size_t index = 0;
    for (int r = 1; r <= d.shape().rows(); ++r) {
        for (int c = 1; c <= d.shape().part(r); ++c) {
            if (d.colors()[index++]) out.push_back({r, c});
        }
    }
    return out;
}

CellCensus hspec_census(int m, int n, int threads) {
    if (threads <= 0) {
        threads = 1;
        if (const char* env = std::getenv("QGR_THREADS")) {
            int parsed = std::atoi(env);
            if (parsed > 0) threads = parsed;
        }
    }

    MatrixShape shape(m, n);
    std::vector<IndexSet> gammas = all_index_sets(shape);

    CellCensus census;
    census.m = m;
    census.n = n;
    census.cells.resize(gammas.size());

    auto fill = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            CellCount& cell = census.cells[i];
            cell.gamma = gammas[i];
            std::vector<int> parts;
            for (int s = 1; s <= m; ++s) parts.push_back(n - m + s - gammas[i].entry(s));
            cell.lambda = Partition(parts);
            cell.count = count_recurrence(cell.lambda);
        }
    };

    if (threads <= 1 || gammas.size() < 2) {
        fill(0, gammas.size());
    } else {
        size_t workers = std::min<size_t>(static_cast<size_t>(threads), gammas.size());
        std::vector<std::thread> pool;
        size_t chunk = (gammas.size() + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t begin = w * chunk;
            size_t end = std::min(gammas.size(), begin + chunk);
            if (begin < end) pool.emplace_back(fill, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    census.total = census.irrelevant;
    for (const CellCount& cell : census.cells) census.total += cell.count;

    if (census.total != williams_total(m, n)) {
        throw std::runtime_error("hspec_census: cell totals disagree with the closed formula");
    }
    return census;
}

} // namespace qgr
