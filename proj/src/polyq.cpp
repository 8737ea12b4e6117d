#include "qgr/polyq.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

PolyQ::PolyQ(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

PolyQ PolyQ::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::domain_error("PolyQ: negative degree");
    PolyQ p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational PolyQ::leading_coeff() const {
    if (is_zero()) throw std::domain_error("PolyQ: leading coefficient of zero");
    return coeffs_.back();
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("PolyQ: division by zero");
    PolyQ remainder = *this;
    std::vector<Rational> quotient;
    int dd = divisor.degree();
    if (remainder.degree() >= dd) {
        quotient.assign(static_cast<size_t>(remainder.degree() - dd) + 1, Rational(0));
    }
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        int shift = remainder.degree() - dd;
        Rational factor = remainder.leading_coeff() / divisor.leading_coeff();
        quotient[static_cast<size_t>(shift)] = factor;
        // remainder -= factor * q^shift * divisor
        for (int i = 0; i <= dd; ++i) {
            remainder.coeffs_[static_cast<size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<size_t>(i)];
        }
        remainder.trim();
    }
    return {PolyQ(std::move(quotient)), remainder};
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw std::domain_error("PolyQ: monic of zero");
    Rational lead = leading_coeff();
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c /= lead;
    return PolyQ(std::move(out));
}

bool PolyQ::is_monic() const {
    return !is_zero() && leading_coeff() == 1;
}

int PolyQ::valuation() const {
    if (is_zero()) throw std::domain_error("PolyQ: valuation of zero");
    int v = 0;
    while (coeffs_[static_cast<size_t>(v)] == 0) ++v;
    return v;
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << abs;
        } else {
            if (abs != 1) out << abs << "*";
            out << "q";
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    // Keeping both operands monic tames coefficient growth.
    if (!a.is_zero()) a = a.monic();
    if (!b.is_zero()) b = b.monic();
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? PolyQ() : r.monic();
    }
    return a;
}

} // namespace qgr
