#include "qgr/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

LaurentQ LaurentQ::term(const Rational& c, long exp) {
    LaurentQ result;
    result.set(exp, c);
    return result;
}

void LaurentQ::set(long exp, const Rational& value) {
    if (value != 0) {
        coeffs_[exp] = value;
    }
}

bool LaurentQ::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Rational LaurentQ::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Rational, long>> LaurentQ::as_single_term() const {
    if (coeffs_.size() != 1) return std::nullopt;
    return std::pair{coeffs_.begin()->second, coeffs_.begin()->first};
}

long LaurentQ::min_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentQ: exponent of zero");
    return coeffs_.begin()->first;
}

long LaurentQ::max_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentQ: exponent of zero");
    return coeffs_.rbegin()->first;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
    for (const auto& [exp, c] : rhs.coeffs_) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) {
    for (const auto& [exp, c] : rhs.coeffs_) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exp, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentQ operator-(const LaurentQ& a) {
    LaurentQ result;
    for (const auto& [exp, c] : a.coeffs_) result.coeffs_.emplace(exp, -c);
    return result;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ result;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            long exp = ea + eb;
            auto it = result.coeffs_.find(exp);
            if (it == result.coeffs_.end()) {
                result.coeffs_.emplace(exp, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) result.coeffs_.erase(it);
            }
        }
    }
    return result;
}

LaurentQ LaurentQ::invert_q() const {
    LaurentQ result;
    for (const auto& [exp, c] : coeffs_) result.coeffs_.emplace(-exp, c);
    return result;
}

Rational LaurentQ::evaluate(const Rational& point) const {
    if (point == 0) throw std::domain_error("LaurentQ: evaluation at q = 0");
    Rational acc(0);
    for (const auto& [exp, c] : coeffs_) {
        Rational power(1);
        Rational base = exp >= 0 ? point : Rational(point.get_den(), point.get_num());
        if (exp < 0) base.canonicalize();
        for (long i = 0; i < (exp >= 0 ? exp : -exp); ++i) power *= base;
        acc += c * power;
    }
    return acc;
}

Rational LaurentQ::at_q_one() const {
    Rational acc(0);
    for (const auto& [exp, c] : coeffs_) acc += c;
    return acc;
}

std::string LaurentQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending exponents read like hand-written expressions.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [exp, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (exp == 0) {
            out << abs;
        } else {
            if (abs != 1) out << abs << "*";
            out << "q";
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

LaurentQ q_minus_qinv() {
    return LaurentQ::q_power(1) - LaurentQ::q_power(-1);
}

} // namespace qgr
