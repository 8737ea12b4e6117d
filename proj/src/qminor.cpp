#include "qgr/qminor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgr {

Element quantum_minor(const IndexSet& row_set, const IndexSet& col_set, const MatrixShape& shape) {
    int t = row_set.size();
    if (t != col_set.size()) throw std::domain_error("quantum_minor: index pair size mismatch");
    if (t < 1) throw std::domain_error("quantum_minor: empty index pair");
    if (row_set.entries().back() > shape.rows || col_set.entries().back() > shape.cols) {
        throw std::domain_error("quantum_minor: index pair outside shape");
    }

    Element result(shape);
    std::vector<int> perm(static_cast<size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    const LaurentQ minus_q = -LaurentQ::q_power(1);
    do {
        int inversions = 0;
        for (int a = 0; a < t; ++a) {
            for (int b = a + 1; b < t; ++b) {
                if (perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)]) ++inversions;
            }
        }
        Word word;
        word.reserve(static_cast<size_t>(t));
        for (int s = 0; s < t; ++s) {
            word.push_back({row_set.entries()[static_cast<size_t>(perm[static_cast<size_t>(s)])],
                            col_set.entries()[static_cast<size_t>(s)]});
        }
        LaurentQ coeff(1);
        for (int i = 0; i < inversions; ++i) coeff *= minus_q;
        result += normal_form(word, coeff, shape);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

Element maximal_minor(const IndexSet& col_set, const MatrixShape& shape) {
    std::vector<int> rows(static_cast<size_t>(shape.rows));
    std::iota(rows.begin(), rows.end(), 1);
    return quantum_minor(IndexSet(rows), col_set, shape);
}

StdMonomial::StdMonomial(std::vector<IndexSet> sets) : chain(std::move(sets)) {
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!leq_st(chain[i], chain[i + 1])) {
            throw std::domain_error("StdMonomial: chain not weakly increasing in <=_st");
        }
    }
}

const IndexSet& StdMonomial::head() const {
    if (chain.empty()) throw std::domain_error("StdMonomial: head of the empty chain");
    return chain.front();
}

std::string StdMonomial::str() const {
    if (chain.empty()) return "1";
    std::string out;
    for (const IndexSet& s : chain) out += s.str();
    return out;
}

std::vector<StdMonomial> std_basis(int degree, const MatrixShape& shape,
                                   const std::optional<IndexSet>& floor) {
    if (degree < 0 || degree > 2) {
        throw std::invalid_argument("std_basis: only degrees 0..2 are materialized");
    }
    std::vector<StdMonomial> out;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<IndexSet> sets = all_index_sets(shape);
    for (const IndexSet& head : sets) {
        if (floor && !leq_st(*floor, head)) continue;
        if (degree == 1) {
            out.push_back(StdMonomial({head}));
            continue;
        }
        for (const IndexSet& second : sets) {
            if (leq_st(head, second)) out.push_back(StdMonomial({head, second}));
        }
    }
    return out;
}

StdExpansion to_expansion(const std::vector<StraightenTerm>& terms) {
    StdExpansion out;
    for (const auto& term : terms) {
        if (term.coeff.is_zero()) continue;
        auto [it, inserted] = out.emplace(term.chain, term.coeff);
        if (!inserted) it->second += term.coeff;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

const Element& Straightener::minor_of(const IndexSet& col_set) {
    auto it = minors_.find(col_set);
    if (it == minors_.end()) {
        it = minors_.emplace(col_set, maximal_minor(col_set, shape_)).first;
    }
    return it->second;
}

namespace {

std::vector<int> column_multiset(const IndexSet& alpha, const IndexSet& beta) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(alpha.size() + beta.size()));
    out.insert(out.end(), alpha.entries().begin(), alpha.entries().end());
    out.insert(out.end(), beta.entries().begin(), beta.entries().end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Degree-2 chains whose column multiset matches the target; the only
/// candidates that can carry weight in the expansion.
std::vector<StdMonomial> weight_block_chains(const std::vector<int>& target, const MatrixShape& shape) {
    std::vector<StdMonomial> out;
    for (const IndexSet& head : all_index_sets(shape)) {
        // Multiset difference target \ head; must exist and be duplicate-free.
        std::vector<int> rest;
        {
            std::vector<int> pool = target;
            bool ok = true;
            for (int e : head.entries()) {
                auto it = std::find(pool.begin(), pool.end(), e);
                if (it == pool.end()) {
                    ok = false;
                    break;
                }
                pool.erase(it);
            }
            if (!ok) continue;
            rest = std::move(pool);
        }
        if (std::adjacent_find(rest.begin(), rest.end()) != rest.end()) continue;
        IndexSet tail(rest);
        if (leq_st(head, tail)) out.push_back(StdMonomial({head, tail}));
    }
    return out;
}

} // namespace

const std::vector<StraightenTerm>& Straightener::straighten(const IndexSet& alpha, const IndexSet& beta) {
    auto key = std::pair{alpha, beta};
    auto cached = straightenings_.find(key);
    if (cached != straightenings_.end()) return cached->second;

    if (!alpha.in_shape(shape_) || !beta.in_shape(shape_)) {
        throw std::domain_error("straighten: index set outside Pi_{m,n}");
    }

    Element product = mul(minor_of(alpha), minor_of(beta));
    std::vector<StdMonomial> candidates = weight_block_chains(column_multiset(alpha, beta), shape_);

    std::vector<std::map<PbwMonomial, LaurentQ>> columns;
    columns.reserve(candidates.size());
    std::map<PbwMonomial, size_t> row_index;
    auto note_rows = [&](const std::map<PbwMonomial, LaurentQ>& terms) {
        for (const auto& [mono, c] : terms) row_index.emplace(mono, 0);
    };
    for (const StdMonomial& chain : candidates) {
        Element expansion = mul(minor_of(chain.chain[0]), minor_of(chain.chain[1]));
        note_rows(expansion.terms());
        columns.push_back(expansion.terms());
    }
    note_rows(product.terms());
    size_t next = 0;
    for (auto& [mono, idx] : row_index) idx = next++;

    RfMatrix a(row_index.size(), std::vector<RatFuncQ>(candidates.size()));
    std::vector<RatFuncQ> rhs(row_index.size());
    for (size_t col = 0; col < columns.size(); ++col) {
        for (const auto& [mono, c] : columns[col]) {
            a[row_index.at(mono)][col] = RatFuncQ::from_laurent(c);
        }
    }
    for (const auto& [mono, c] : product.terms()) {
        rhs[row_index.at(mono)] = RatFuncQ::from_laurent(c);
    }

    LinearSolveResult solved = solve_exact(std::move(a), std::move(rhs));
    if (!solved.consistent || !solved.unique) {
        throw std::runtime_error("straighten: singular system for " + alpha.str() + beta.str() +
                                 " (engine inconsistency)");
    }

    std::vector<StraightenTerm> result;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (!solved.solution[i].is_zero()) {
            result.push_back({solved.solution[i], candidates[i]});
        }
    }

    // Axiom (4): incomparable products straighten strictly below both factors.
    if (!leq_st(alpha, beta) && !leq_st(beta, alpha)) {
        for (const StraightenTerm& term : result) {
            if (!(lt_st(term.chain.head(), alpha) && lt_st(term.chain.head(), beta))) {
                throw std::runtime_error("straighten: chain head not below both factors for " +
                                         alpha.str() + beta.str());
            }
        }
    }

    return straightenings_.emplace(key, std::move(result)).first->second;
}

QuasiCommutatorResult Straightener::quasi_commutator(const IndexSet& alpha, const IndexSet& beta) {
    StdExpansion forward = to_expansion(straighten(alpha, beta));
    StdExpansion backward = to_expansion(straighten(beta, alpha));

    auto is_lower = [&](const StdMonomial& chain) {
        return lt_st(chain.head(), alpha) && lt_st(chain.head(), beta);
    };

    // Chains at or above a factor pin the constant: S_f = c * S_b there.
    std::optional<RatFuncQ> c;
    for (const auto& [chain, coeff] : backward) {
        if (is_lower(chain)) continue;
        auto it = forward.find(chain);
        RatFuncQ fwd = it == forward.end() ? RatFuncQ() : it->second;
        RatFuncQ candidate = fwd / coeff;
        if (c && !(*c == candidate)) {
            throw std::runtime_error("quasi_commutator: no single constant matches " + alpha.str() +
                                     beta.str());
        }
        c = candidate;
    }
    for (const auto& [chain, coeff] : forward) {
        if (is_lower(chain)) continue;
        if (backward.find(chain) == backward.end()) {
            throw std::runtime_error("quasi_commutator: upper chain " + chain.str() +
                                     " unmatched in " + beta.str() + alpha.str());
        }
    }
    if (!c) c = RatFuncQ(1); // both sides already lower; any constant works

    if (!is_power_of_q(*c)) {
        throw std::runtime_error("quasi_commutator: constant " + c->str() + " is not +-q^e for " +
                                 alpha.str() + beta.str());
    }

    QuasiCommutatorResult result;
    result.c = *c;
    StdExpansion lower = forward;
    for (const auto& [chain, coeff] : backward) {
        RatFuncQ scaled = *c * coeff;
        auto [it, inserted] = lower.emplace(chain, -scaled);
        if (!inserted) {
            it->second -= scaled;
            if (it->second.is_zero()) lower.erase(it);
        } else if (it->second.is_zero()) {
            lower.erase(it);
        }
    }
    for (const auto& [chain, coeff] : lower) {
        if (!is_lower(chain)) {
            throw std::runtime_error("quasi_commutator: residual chain " + chain.str() +
                                     " not below both factors");
        }
        result.lower.push_back({coeff, chain});
    }
    return result;
}

std::map<PbwMonomial, RatFuncQ> Straightener::pbw_of_element(const Element& e) const {
    std::map<PbwMonomial, RatFuncQ> out;
    for (const auto& [mono, c] : e.terms()) out.emplace(mono, RatFuncQ::from_laurent(c));
    return out;
}

std::map<PbwMonomial, RatFuncQ> Straightener::expand_to_pbw(const std::vector<StraightenTerm>& terms) {
    std::map<PbwMonomial, RatFuncQ> out;
    for (const StraightenTerm& term : terms) {
        Element expansion = Element::one(shape_);
        for (const IndexSet& s : term.chain.chain) expansion = mul(expansion, minor_of(s));
        for (const auto& [mono, c] : expansion.terms()) {
            RatFuncQ add = term.coeff * RatFuncQ::from_laurent(c);
            auto [it, inserted] = out.emplace(mono, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::vector<StraightenTerm> straighten_product(const IndexSet& alpha, const IndexSet& beta,
                                               const MatrixShape& shape) {
    Straightener s(shape);
    return s.straighten(alpha, beta);
}

QuasiCommutatorResult quasi_commutator(const IndexSet& alpha, const IndexSet& beta,
                                       const MatrixShape& shape) {
    Straightener s(shape);
    return s.quasi_commutator(alpha, beta);
}

Element schubert_minor(const IndexSet& gamma, int ladder_row, int ladder_col, const MatrixShape& shape) {
    GammaCell cell = gamma_to_cell(gamma, shape);
    for (const LadderPosition& p : cell.ladder) {
        if (p.row == ladder_row && p.col == ladder_col) {
            return maximal_minor(p.displaced_minor, shape);
        }
    }
    throw std::domain_error("schubert_minor: position outside the ladder of " + gamma.str());
}

namespace {

StdExpansion truncate_to_cell(const StdExpansion& expansion, const IndexSet& gamma) {
    StdExpansion out;
    for (const auto& [chain, coeff] : expansion) {
        if (leq_st(gamma, chain.head())) out.emplace(chain, coeff);
    }
    return out;
}

StdExpansion scale(const StdExpansion& expansion, const RatFuncQ& factor) {
    StdExpansion out;
    for (const auto& [chain, coeff] : expansion) {
        RatFuncQ scaled = factor * coeff;
        if (!scaled.is_zero()) out.emplace(chain, scaled);
    }
    return out;
}

StdExpansion subtract(StdExpansion lhs, const StdExpansion& rhs) {
    for (const auto& [chain, coeff] : rhs) {
        auto [it, inserted] = lhs.emplace(chain, -coeff);
        if (!inserted) {
            it->second -= coeff;
            if (it->second.is_zero()) lhs.erase(it);
        } else if (it->second.is_zero()) {
            lhs.erase(it);
        }
    }
    return lhs;
}

std::string expansion_str(const StdExpansion& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [chain, coeff] : e) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ")*" + chain.str();
    }
    return out;
}

} // namespace

CheckReport verify_gamma_normality(const IndexSet& gamma, const MatrixShape& shape, Straightener* shared) {
    CheckReport report;
    report.suite = "gamma-normality";
    report.params = gamma.str() + " in " + shape.str();

    Straightener local(shape);
    Straightener& s = shared ? *shared : local;
    GammaCell cell = gamma_to_cell(gamma, shape);
    RatFuncQ q = RatFuncQ::from_laurent(LaurentQ::q_power(1));

    for (const LadderPosition& p : cell.ladder) {
        StdExpansion lhs = truncate_to_cell(to_expansion(s.straighten(gamma, p.displaced_minor)), gamma);
        StdExpansion rhs = truncate_to_cell(to_expansion(s.straighten(p.displaced_minor, gamma)), gamma);
        StdExpansion residual = subtract(lhs, scale(rhs, q));
        ++report.checked;
        if (!residual.empty()) {
            std::ostringstream msg;
            msg << "gamma m_{" << p.row << "," << p.col << "} != q m gamma; residual "
                << expansion_str(residual);
            report.failures.push_back(msg.str());
        }
    }
    return report;
}

CheckReport verify_ladder_relations(const IndexSet& gamma, const MatrixShape& shape, Straightener* shared) {
    CheckReport report;
    report.suite = "ladder-relations";
    report.params = gamma.str() + " in " + shape.str();

    Straightener local(shape);
    Straightener& s = shared ? *shared : local;
    GammaCell cell = gamma_to_cell(gamma, shape);
    RatFuncQ q = RatFuncQ::from_laurent(LaurentQ::q_power(1));
    RatFuncQ hook = RatFuncQ::from_laurent(q_minus_qinv());

    auto displaced = [&](int row, int col) -> const IndexSet& {
        for (const LadderPosition& p : cell.ladder) {
            if (p.row == row && p.col == col) return p.displaced_minor;
        }
        throw std::logic_error("verify_ladder_relations: missing ladder position");
    };

    auto product = [&](const IndexSet& a, const IndexSet& b) {
        return truncate_to_cell(to_expansion(s.straighten(a, b)), gamma);
    };

    for (size_t x = 0; x < cell.ladder.size(); ++x) {
        for (size_t y = x + 1; y < cell.ladder.size(); ++y) {
            const LadderPosition& pu = cell.ladder[x];
            const LadderPosition& pv = cell.ladder[y];
            VarIndex u{pu.row, pu.col};
            VarIndex v{pv.row, pv.col};
            const IndexSet& mu = pu.displaced_minor;
            const IndexSet& mv = pv.displaced_minor;

            StdExpansion residual;
            switch (relation_class(u, v)) {
                case RelationClass::SameRow:
                case RelationClass::SameColumn:
                    residual = subtract(product(mu, mv), scale(product(mv, mu), q));
                    break;
                case RelationClass::Antidiagonal:
                    residual = subtract(product(mu, mv), product(mv, mu));
                    break;
                case RelationClass::Diagonal: {
                    // The ladder is closed under the northwest completion, so
                    // both corner minors exist.
                    const IndexSet& m_ul = displaced(u.row, v.col);
                    const IndexSet& m_vr = displaced(v.row, u.col);
                    residual = subtract(subtract(product(mu, mv), product(mv, mu)),
                                        scale(product(m_ul, m_vr), hook));
                    break;
                }
                case RelationClass::Equal:
                    continue;
            }
            ++report.checked;
            if (!residual.empty()) {
                std::ostringstream msg;
                msg << "ladder relation " << to_string(relation_class(u, v)) << " fails at m_{" << u.row
                    << "," << u.col << "}, m_{" << v.row << "," << v.col << "}; residual "
                    << expansion_str(residual);
                report.failures.push_back(msg.str());
            }
        }
    }
    return report;
}

CheckReport verify_asl(const MatrixShape& shape) {
    CheckReport report;
    report.suite = "asl";
    report.params = shape.str();

    Straightener s(shape);
    std::vector<IndexSet> sets = all_index_sets(shape);

    // Axiom (3) at degree 2: each H-weight block of standard monomials is
    // linearly independent.
    {
        std::map<std::vector<int>, std::vector<StdMonomial>> blocks;
        for (const StdMonomial& chain : std_basis(2, shape)) {
            blocks[column_multiset(chain.chain[0], chain.chain[1])].push_back(chain);
        }
        for (const auto& [weight, chains] : blocks) {
            std::map<PbwMonomial, size_t> row_index;
            std::vector<std::map<PbwMonomial, LaurentQ>> columns;
            for (const StdMonomial& chain : chains) {
                Element expansion = mul(s.minor_of(chain.chain[0]), s.minor_of(chain.chain[1]));
                for (const auto& [mono, c] : expansion.terms()) row_index.emplace(mono, 0);
                columns.push_back(expansion.terms());
            }
            size_t next = 0;
            for (auto& [mono, idx] : row_index) idx = next++;
            RfMatrix a(row_index.size(), std::vector<RatFuncQ>(chains.size()));
            for (size_t col = 0; col < columns.size(); ++col) {
                for (const auto& [mono, c] : columns[col]) {
                    a[row_index.at(mono)][col] = RatFuncQ::from_laurent(c);
                }
            }
            ++report.checked;
            int rank = rank_exact(std::move(a));
            if (rank != static_cast<int>(chains.size())) {
                report.failures.push_back("axiom 3: dependent standard monomials in weight block of " +
                                          chains.front().str());
            }
        }
    }

    // Axioms (4), (5) and straightening soundness over every ordered pair.
    for (const IndexSet& alpha : sets) {
        for (const IndexSet& beta : sets) {
            const std::vector<StraightenTerm>* terms = nullptr;
            try {
                terms = &s.straighten(alpha, beta); // axiom 4 enforced inside
            } catch (const std::runtime_error& err) {
                report.failures.push_back(err.what());
                ++report.checked;
                continue;
            }
            ++report.checked;

            // Soundness: re-expansion to PBW reproduces the product exactly.
            auto lhs = s.pbw_of_element(mul(s.minor_of(alpha), s.minor_of(beta)));
            auto rhs = s.expand_to_pbw(*terms);
            ++report.checked;
            if (lhs != rhs) {
                report.failures.push_back("straightening of " + alpha.str() + beta.str() +
                                          " does not re-expand to the product");
            }

            ++report.checked;
            try {
                s.quasi_commutator(alpha, beta); // axiom 5 enforced inside
            } catch (const std::runtime_error& err) {
                report.failures.push_back(err.what());
            }
        }
    }
    return report;
}

} // namespace qgr
