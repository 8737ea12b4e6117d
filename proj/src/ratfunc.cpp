#include "qgr/ratfunc.hpp"

#include <stdexcept>

namespace qgr {

RatFuncQ RatFuncQ::normalized(const PolyQ& numerator, const PolyQ& denominator) {
    if (denominator.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    if (numerator.is_zero()) return RatFuncQ();
    PolyQ g = poly_gcd(numerator, denominator);
    PolyQ n = numerator.divmod(g).first;
    PolyQ d = denominator.divmod(g).first;
    Rational lead = d.leading_coeff();
    if (lead != 1) {
        n = n * PolyQ(Rational(1) / lead);
        d = d * PolyQ(Rational(1) / lead);
    }
    return RatFuncQ(std::move(n), std::move(d));
}

RatFuncQ RatFuncQ::from_laurent(const LaurentQ& value) {
    if (value.is_zero()) return RatFuncQ();
    long shift = std::min(value.min_exponent(), 0L);
    std::vector<Rational> coeffs(static_cast<size_t>(value.max_exponent() - shift) + 1, Rational(0));
    for (const auto& [exp, c] : value.coeffs()) coeffs[static_cast<size_t>(exp - shift)] = c;
    return normalized(PolyQ(std::move(coeffs)), PolyQ::monomial(rational(1), static_cast<int>(-shift)));
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ::normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a) {
    return RatFuncQ(-a.num_, a.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
    return RatFuncQ::normalized(a.num_ * b.den_, a.den_ * b.num_);
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
    return normalized(den_, num_);
}

std::optional<LaurentQ> RatFuncQ::as_laurent() const {
    if (is_zero()) return LaurentQ();
    // Reduced denominator must be q^k.
    int dd = den_.degree();
    for (int i = 0; i < dd; ++i) {
        if (den_.coeff(i) != 0) return std::nullopt;
    }
    LaurentQ out;
    for (int i = 0; i <= num_.degree(); ++i) {
        Rational c = num_.coeff(i);
        if (c != 0) out += LaurentQ::term(c, i - dd);
    }
    return out;
}

std::string RatFuncQ::str() const {
    if (den_ == PolyQ(1)) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

std::optional<QPower> is_power_of_q(const RatFuncQ& a) {
    if (a.is_zero()) return std::nullopt;
    const PolyQ& n = a.numerator();
    const PolyQ& d = a.denominator();
    // Both must be single terms; reduction guarantees at most one of them
    // carries a positive q-power.
    if (n.valuation() != n.degree() || d.valuation() != d.degree()) return std::nullopt;
    Rational lead = n.leading_coeff(); // denominator is monic
    if (lead != 1 && lead != -1) return std::nullopt;
    return QPower{static_cast<long>(n.degree() - d.degree()), lead == -1};
}

} // namespace qgr
