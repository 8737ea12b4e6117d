#include "qgr/cauchon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgr {

QTorus::QTorus(Partition lambda) : lambda_(std::move(lambda)) {
    for (auto [r, c] : lambda_.squares()) variables_.push_back({r, c});
}

size_t QTorus::variable_index(VarIndex v) const {
    auto it = std::lower_bound(variables_.begin(), variables_.end(), v);
    if (it == variables_.end() || !(*it == v)) {
        throw std::domain_error("QTorus: variable outside Y_lambda");
    }
    return static_cast<size_t>(it - variables_.begin());
}

int QTorus::commutation(VarIndex a, VarIndex b) {
    if (a.row == b.row && a.col != b.col) return a.col < b.col ? 1 : -1;
    if (a.col == b.col && a.row != b.row) return a.row < b.row ? 1 : -1;
    return 0;
}

TorusElement TorusElement::zero(const QTorus& torus) {
    return TorusElement(torus);
}

TorusElement TorusElement::one(const QTorus& torus) {
    TorusElement e(torus);
    e.add_term(std::vector<int>(torus.variables().size(), 0), LaurentQ(1));
    return e;
}

TorusElement TorusElement::generator(const QTorus& torus, VarIndex v, int power) {
    TorusElement e(torus);
    std::vector<int> exps(torus.variables().size(), 0);
    exps[torus.variable_index(v)] = power;
    e.add_term(exps, LaurentQ(1));
    return e;
}

void TorusElement::add_term(const std::vector<int>& exponents, const LaurentQ& c) {
    if (exponents.size() != width_) throw std::domain_error("TorusElement: exponent width mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    if (lambda_ != rhs.lambda_) throw std::domain_error("TorusElement: shape mismatch");
    for (const auto& [exps, c] : rhs.terms_) add_term(exps, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
    if (lambda_ != rhs.lambda_) throw std::domain_error("TorusElement: shape mismatch");
    for (const auto& [exps, c] : rhs.terms_) add_term(exps, -c);
    return *this;
}

bool TorusElement::is_bare_generator(const QTorus& torus, VarIndex v) const {
    if (terms_.size() != 1) return false;
    const auto& [exps, c] = *terms_.begin();
    if (!c.is_one()) return false;
    size_t idx = torus.variable_index(v);
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != (i == idx ? 1 : 0)) return false;
    }
    return true;
}

std::optional<HWeight> TorusElement::homogeneous_weight(const QTorus& torus) const {
    if (terms_.empty()) return std::nullopt;
    int rows = lambda_.rows();
    int cols = lambda_.empty() ? 0 : lambda_.part(1);
    std::optional<HWeight> weight;
    for (const auto& [exps, c] : terms_) {
        HWeight w{std::vector<long>(static_cast<size_t>(rows), 0),
                  std::vector<long>(static_cast<size_t>(cols), 0)};
        for (size_t i = 0; i < exps.size(); ++i) {
            const VarIndex& v = torus.variables()[i];
            w.row_weights[static_cast<size_t>(v.row - 1)] += exps[i];
            w.col_weights[static_cast<size_t>(v.col - 1)] += exps[i];
        }
        if (!weight) {
            weight = std::move(w);
        } else if (!(*weight == w)) {
            return std::nullopt;
        }
    }
    return weight;
}

std::string TorusElement::str(const QTorus& torus) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        auto single = c.as_single_term();
        bool negative = single && single->first < 0;
        LaurentQ display = negative ? -c : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            const VarIndex& v = torus.variables()[i];
            mono += "t[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
            if (exps[i] != 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) mono = "1";
        if (display.is_one()) {
            out << mono;
        } else if (display.as_single_term()) {
            out << display.str() << "*" << mono;
        } else {
            out << "(" << display.str() << ")*" << mono;
        }
    }
    return out.str();
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b, const QTorus& torus) {
    TorusElement result(torus);
    const auto& vars = torus.variables();
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            // Sort t^u t^v into t^{u+v}: each swap of a later u-variable past
            // an earlier v-variable contributes its commutation exponent.
            long twist = 0;
            for (size_t x = 0; x < vars.size(); ++x) {
                if (u[x] == 0) continue;
                for (size_t y = 0; y < x; ++y) {
                    if (v[y] == 0) continue;
                    twist += static_cast<long>(u[x]) * v[y] * QTorus::commutation(vars[x], vars[y]);
                }
            }
            std::vector<int> sum(u.size());
            for (size_t i = 0; i < u.size(); ++i) sum[i] = u[i] + v[i];
            result.add_term(sum, cu * cv * LaurentQ::q_power(twist));
        }
    }
    return result;
}

TorusElement torus_monomial_inverse(const TorusElement& a, const QTorus& torus) {
    if (a.terms().size() != 1) throw std::domain_error("torus_monomial_inverse: not a monomial");
    const auto& [u, c] = *a.terms().begin();
    auto single = c.as_single_term();
    if (!single) throw std::domain_error("torus_monomial_inverse: coefficient not invertible as a q-power term");
    const auto& vars = torus.variables();
    // (t^u)^{-1} = q^{sum_{x>y} u_x u_y c(x,y)} t^{-u}
    long twist = 0;
    for (size_t x = 0; x < vars.size(); ++x) {
        if (u[x] == 0) continue;
        for (size_t y = 0; y < x; ++y) {
            if (u[y] == 0) continue;
            twist += static_cast<long>(u[x]) * u[y] * QTorus::commutation(vars[x], vars[y]);
        }
    }
    std::vector<int> neg(u.size());
    for (size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    TorusElement result(torus);
    Rational coeff = Rational(1) / single->first;
    result.add_term(neg, LaurentQ::term(coeff, -single->second + twist));
    return result;
}

std::vector<std::pair<int, int>> restoration_steps(const Partition& lambda) {
    std::vector<std::pair<int, int>> steps;
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            if (i == 1 && j == 1) continue;
            steps.emplace_back(i, j);
        }
    }
    return steps; // ascending lexicographic by construction
}

RestoredMatrix restore(const Partition& lambda) {
    if (lambda.empty()) throw std::domain_error("restore: empty partition");
    QTorus torus(lambda);

    RestoredMatrix result;
    result.lambda = lambda;
    for (const VarIndex& v : torus.variables()) {
        result.entries.emplace(std::pair{v.row, v.col}, TorusElement::generator(torus, v));
    }

    for (auto [j, beta] : restoration_steps(lambda)) {
        TorusElement& pivot = result.entries.at({j, beta});
        if (!pivot.is_bare_generator(torus, {j, beta})) {
            throw std::logic_error("restore: pivot entry is no longer a bare generator");
        }
        TorusElement pivot_inv = torus_monomial_inverse(pivot, torus);
        for (int i = 1; i < j; ++i) {
            for (int alpha = 1; alpha < beta; ++alpha) {
                TorusElement& target = result.entries.at({i, alpha});
                TorusElement correction = torus_mul(
                    torus_mul(result.entries.at({i, beta}), pivot_inv, torus),
                    result.entries.at({j, alpha}), torus);
                target += correction;
            }
        }
    }
    return result;
}

CheckReport verify_restored_relations(const Partition& lambda) {
    CheckReport report;
    report.suite = "restore";
    report.params = lambda.str();

    QTorus torus(lambda);
    RestoredMatrix restored = restore(lambda);
    const LaurentQ q = LaurentQ::q_power(1);
    const LaurentQ hook = q_minus_qinv();

    auto x = [&](int r, int c) -> const TorusElement& { return restored.entries.at({r, c}); };

    const auto& vars = torus.variables();
    for (size_t a = 0; a < vars.size(); ++a) {
        for (size_t b = a + 1; b < vars.size(); ++b) {
            VarIndex u = vars[a];
            VarIndex v = vars[b];
            TorusElement uv = torus_mul(x(u.row, u.col), x(v.row, v.col), torus);
            TorusElement vu = torus_mul(x(v.row, v.col), x(u.row, u.col), torus);
            TorusElement residual = TorusElement::zero(torus);
            switch (relation_class(u, v)) {
                case RelationClass::SameRow:
                case RelationClass::SameColumn: {
                    // x_u x_v = q x_v x_u
                    TorusElement rhs(torus);
                    for (const auto& [exps, c] : vu.terms()) rhs.add_term(exps, q * c);
                    residual = uv - rhs;
                    break;
                }
                case RelationClass::Antidiagonal:
                    residual = uv - vu;
                    break;
                case RelationClass::Diagonal: {
                    TorusElement extra = torus_mul(x(u.row, v.col), x(v.row, u.col), torus);
                    TorusElement scaled(torus);
                    for (const auto& [exps, c] : extra.terms()) scaled.add_term(exps, hook * c);
                    residual = uv - vu - scaled;
                    break;
                }
                case RelationClass::Equal:
                    continue;
            }
            ++report.checked;
            if (!residual.is_zero()) {
                std::ostringstream msg;
                msg << "relation residual at x[" << u.row << "," << u.col << "], x[" << v.row << "," << v.col
                    << "]: " << residual.str(torus);
                report.failures.push_back(msg.str());
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Localization at x_{m, lambda_m}
// ---------------------------------------------------------------------------

void LocalizedElement::add_term(const PbwMonomial& mono, long ypow, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto key = std::pair{mono, ypow};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& rhs) {
    if (lambda_ != rhs.lambda_) throw std::domain_error("LocalizedElement: shape mismatch");
    for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

LocalizedElement& LocalizedElement::operator-=(const LocalizedElement& rhs) {
    if (lambda_ != rhs.lambda_) throw std::domain_error("LocalizedElement: shape mismatch");
    for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
    return *this;
}

LocalizedElement operator*(const LaurentQ& c, const LocalizedElement& e) {
    LocalizedElement out(e.shape_, e.lambda_);
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : e.terms_) out.add_term(key.first, key.second, c * coeff);
    return out;
}

std::string LocalizedElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << monomial_str(key.first);
        if (key.second != 0) out << "*y^" << key.second;
    }
    return out.str();
}

Localization::Localization(Partition lambda)
    : lambda_(std::move(lambda)),
      shape_(lambda_.rows(), std::max(lambda_.empty() ? 1 : lambda_.part(1), lambda_.rows())),
      pivot_{lambda_.rows(), lambda_.empty() ? 0 : lambda_.part(lambda_.rows())} {
    if (lambda_.empty()) throw std::domain_error("Localization: empty partition");
}

LocalizedElement Localization::one() const {
    LocalizedElement e(shape_, lambda_);
    e.add_term({}, 0, LaurentQ(1));
    return e;
}

LocalizedElement Localization::generator(VarIndex v) const {
    if (!index_in_algebra(v, shape_, lambda_)) {
        throw std::domain_error("Localization: generator outside A_lambda");
    }
    LocalizedElement e(shape_, lambda_);
    if (v == pivot_) {
        e.add_term({}, 1, LaurentQ(1));
    } else {
        e.add_term({{v, 1}}, 0, LaurentQ(1));
    }
    return e;
}

LocalizedElement Localization::y_power(long k) const {
    LocalizedElement e(shape_, lambda_);
    e.add_term({}, k, LaurentQ(1));
    return e;
}

LocalizedElement Localization::embed(const Element& e) const {
    LocalizedElement out(shape_, lambda_);
    for (const auto& [mono, c] : e.terms()) {
        PbwMonomial rest = mono;
        long ypow = 0;
        if (!rest.empty() && rest.back().first == pivot_) {
            ypow = rest.back().second;
            rest.pop_back();
        }
        out.add_term(rest, ypow, c);
    }
    return out;
}

namespace {

struct LocLetter {
    VarIndex v;
    bool inverse = false; // only ever true for the pivot
};

struct PushedTerm {
    LaurentQ coeff;
    Word word; // generators only (may include positive pivot letters)
    long ypow = 0;
};

// y^{-1} * T for a generator-only word T, as sum of coeff * word * y^{ypow}.
// The scalar on each branch is assembled from the defining relations alone.
std::vector<PushedTerm> push_inverse(const Word& word, VarIndex pivot) {
    if (word.empty()) return {{LaurentQ(1), {}, -1}};
    VarIndex g = word.front();
    Word rest(word.begin() + 1, word.end());
    if (g == pivot) {
        return {{LaurentQ(1), rest, 0}};
    }

    std::vector<PushedTerm> tail = push_inverse(rest, pivot);
    std::vector<PushedTerm> out;
    switch (relation_class(g, pivot)) {
        case RelationClass::SameRow:
        case RelationClass::SameColumn: {
            // g y = q y g, so y^{-1} g = q g y^{-1}
            for (auto& t : tail) {
                Word w;
                w.reserve(t.word.size() + 1);
                w.push_back(g);
                w.insert(w.end(), t.word.begin(), t.word.end());
                out.push_back({LaurentQ::q_power(1) * t.coeff, std::move(w), t.ypow});
            }
            break;
        }
        case RelationClass::Antidiagonal: {
            for (auto& t : tail) {
                Word w;
                w.reserve(t.word.size() + 1);
                w.push_back(g);
                w.insert(w.end(), t.word.begin(), t.word.end());
                out.push_back({t.coeff, std::move(w), t.ypow});
            }
            break;
        }
        case RelationClass::Diagonal: {
            // g y - y g = (q - q^-1) w1 w2 with w1, w2 collinear with y, so
            // y^{-1} g = g y^{-1} + (q - q^-1) y^{-1} w1 w2 y^{-1}.
            VarIndex w1{g.row, pivot.col};
            VarIndex w2{pivot.row, g.col};
            const LaurentQ hook = q_minus_qinv();
            for (auto& t : tail) {
                Word w;
                w.reserve(t.word.size() + 1);
                w.push_back(g);
                w.insert(w.end(), t.word.begin(), t.word.end());
                out.push_back({t.coeff, std::move(w), t.ypow});
            }
            for (const auto& t : tail) {
                Word inner;
                inner.reserve(t.word.size() + 2);
                inner.push_back(w1);
                inner.push_back(w2);
                inner.insert(inner.end(), t.word.begin(), t.word.end());
                for (auto& deeper : push_inverse(inner, pivot)) {
                    out.push_back({hook * t.coeff * deeper.coeff, std::move(deeper.word), deeper.ypow + t.ypow});
                }
            }
            break;
        }
        case RelationClass::Equal:
            throw std::logic_error("push_inverse: pivot handled above");
    }
    return out;
}

} // namespace

LocalizedElement Localization::mul(const LocalizedElement& a, const LocalizedElement& b) const {
    LocalizedElement result(shape_, lambda_);

    auto append_power = [&](std::vector<LocLetter>& letters, long k) {
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) letters.push_back({pivot_, k < 0});
    };

    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<LocLetter> letters;
            for (const VarIndex& v : word_of_monomial(ka.first)) letters.push_back({v, false});
            append_power(letters, ka.second);
            for (const VarIndex& v : word_of_monomial(kb.first)) letters.push_back({v, false});
            append_power(letters, kb.second);

            struct WorkItem {
                LaurentQ coeff;
                std::vector<LocLetter> letters;
            };
            std::vector<WorkItem> work;
            work.push_back({ca * cb, std::move(letters)});

            while (!work.empty()) {
                WorkItem item = std::move(work.back());
                work.pop_back();

                // Rightmost inverse that still has a generator after it; all
                // letters past it are then generators followed by inverses.
                size_t reducible = item.letters.size();
                {
                    bool seen_generator = false;
                    for (size_t p = item.letters.size(); p-- > 0;) {
                        if (!item.letters[p].inverse) {
                            seen_generator = true;
                        } else if (seen_generator) {
                            reducible = p;
                            break;
                        }
                    }
                }

                if (reducible == item.letters.size()) {
                    // Generator prefix, inverse-only tail.
                    Word prefix;
                    long tail_inverses = 0;
                    for (const LocLetter& l : item.letters) {
                        if (l.inverse) {
                            ++tail_inverses;
                        } else {
                            prefix.push_back(l.v);
                        }
                    }
                    Element nf = normal_form(prefix, item.coeff, shape_, lambda_);
                    for (const auto& [mono, c] : nf.terms()) {
                        PbwMonomial restm = mono;
                        long ypow = -tail_inverses;
                        if (!restm.empty() && restm.back().first == pivot_) {
                            ypow += restm.back().second;
                            restm.pop_back();
                        }
                        result.add_term(restm, ypow, c);
                    }
                    continue;
                }

                Word generators;
                size_t tail_start = reducible + 1;
                while (tail_start < item.letters.size() && !item.letters[tail_start].inverse) {
                    generators.push_back(item.letters[tail_start].v);
                    ++tail_start;
                }
                std::vector<LocLetter> tail(item.letters.begin() + static_cast<long>(tail_start),
                                            item.letters.end());
                std::vector<LocLetter> head(item.letters.begin(), item.letters.begin() + static_cast<long>(reducible));

                for (auto& pushed : push_inverse(generators, pivot_)) {
                    WorkItem next;
                    next.coeff = item.coeff * pushed.coeff;
                    next.letters = head;
                    for (const VarIndex& v : pushed.word) next.letters.push_back({v, false});
                    append_power(next.letters, pushed.ypow);
                    next.letters.insert(next.letters.end(), tail.begin(), tail.end());
                    work.push_back(std::move(next));
                }
            }
        }
    }
    return result;
}

CheckReport single_step_deletion(const Partition& lambda) {
    if (lambda.empty()) throw std::domain_error("single_step_deletion: lambda_m must be positive");

    CheckReport report;
    report.suite = "delete";
    report.params = lambda.str();

    Localization loc(lambda);
    const int m = lambda.rows();
    const int last = lambda.part(m);

    std::vector<int> reduced_parts(lambda.parts());
    reduced_parts[static_cast<size_t>(m - 1)] -= 1;
    Partition reduced(reduced_parts);

    const LaurentQ q = LaurentQ::q_power(1);
    const LaurentQ q_inv = LaurentQ::q_power(-1);
    const LaurentQ hook = q_minus_qinv();

    // Images of the A_{lambda'} generators inside A_lambda[y^{-1}].
    std::map<std::pair<int, int>, LocalizedElement> image;
    std::vector<VarIndex> reduced_vars;
    for (int i = 1; i <= reduced.rows(); ++i) {
        for (int alpha = 1; alpha <= reduced.part(i); ++alpha) {
            reduced_vars.push_back({i, alpha});
            VarIndex v{i, alpha};
            if (i < m && alpha < last) {
                LocalizedElement correction = loc.mul(
                    loc.mul(loc.generator({i, last}), loc.y_power(-1)),
                    loc.generator({m, alpha}));
                image.emplace(std::pair{i, alpha}, loc.generator(v) - correction);
            } else {
                image.emplace(std::pair{i, alpha}, loc.generator(v));
            }
        }
    }

    auto xp = [&](VarIndex v) -> const LocalizedElement& { return image.at({v.row, v.col}); };

    // A_{lambda'} defining relations on the images.
    for (size_t a = 0; a < reduced_vars.size(); ++a) {
        for (size_t b = a + 1; b < reduced_vars.size(); ++b) {
            VarIndex u = reduced_vars[a];
            VarIndex v = reduced_vars[b];
            LocalizedElement uv = loc.mul(xp(u), xp(v));
            LocalizedElement vu = loc.mul(xp(v), xp(u));
            LocalizedElement residual = loc.zero();
            switch (relation_class(u, v)) {
                case RelationClass::SameRow:
                case RelationClass::SameColumn:
                    residual = uv - q * vu;
                    break;
                case RelationClass::Antidiagonal:
                    residual = uv - vu;
                    break;
                case RelationClass::Diagonal: {
                    LocalizedElement extra = loc.mul(xp({u.row, v.col}), xp({v.row, u.col}));
                    residual = (uv - vu) - hook * extra;
                    break;
                }
                case RelationClass::Equal:
                    continue;
            }
            ++report.checked;
            if (!residual.is_zero()) {
                std::ostringstream msg;
                msg << "A_lambda' relation residual at x'[" << u.row << "," << u.col << "], x'[" << v.row
                    << "," << v.col << "]: " << residual.str();
                report.failures.push_back(msg.str());
            }
        }
    }

    // Conjugation by y realizes sigma: q^{-1} on row m and column lambda_m,
    // identity elsewhere.
    for (const VarIndex& v : reduced_vars) {
        LocalizedElement conj = loc.mul(loc.mul(loc.y_power(1), xp(v)), loc.y_power(-1));
        bool scaled = v.row == m || v.col == last;
        LocalizedElement expected = scaled ? q_inv * xp(v) : xp(v);
        ++report.checked;
        if (!(conj == expected)) {
            std::ostringstream msg;
            msg << "sigma mismatch at x'[" << v.row << "," << v.col << "]: y x' y^-1 = " << conj.str()
                << ", expected " << expected.str();
            report.failures.push_back(msg.str());
        }
    }

    // Localization consistency: the change of variables inverts exactly.
    for (const VarIndex& v : reduced_vars) {
        if (!(v.row < m && v.col < last)) continue;
        LocalizedElement recovered = xp(v) + loc.mul(loc.mul(loc.generator({v.row, last}), loc.y_power(-1)),
                                                     loc.generator({m, v.col}));
        ++report.checked;
        if (!(recovered == loc.generator(v))) {
            std::ostringstream msg;
            msg << "recovery mismatch at x[" << v.row << "," << v.col << "]: " << recovered.str();
            report.failures.push_back(msg.str());
        }
    }

    return report;
}

HPrimeLabel diagram_to_hprime_label(const CauchonDiagram& d) {
    if (!is_valid(d)) throw std::domain_error("diagram_to_hprime_label: not a Cauchon diagram");
    HPrimeLabel out;
    out.lambda = d.shape();
    out.bitstring = d.bitstring();
    out.k_generators = kc_generators(d);

    std::string parts;
    bool wide = false;
    for (int p : out.lambda.parts()) {
        if (p > 9) wide = true;
    }
    for (size_t i = 0; i < out.lambda.parts().size(); ++i) {
        if (wide && i > 0) parts += ",";
        parts += std::to_string(out.lambda.parts()[i]);
    }
    if (parts.empty()) parts = "0";
    out.label = parts + "/" + out.bitstring;
    return out;
}

} // namespace qgr
