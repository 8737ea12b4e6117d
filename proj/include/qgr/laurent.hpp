#pragma once

#include <map>
#include <optional>
#include <string>

#include "qgr/rational.hpp"

namespace qgr {

/// Laurent polynomial in the deformation parameter q with rational
/// coefficients. This is the scalar ring used by the PBW engines; zero
/// coefficients are never stored.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long value) { set(0, rational(value)); }
    LaurentQ(const Rational& value) { set(0, value); }

    /// c * q^exp
    static LaurentQ term(const Rational& c, long exp);
    static LaurentQ q_power(long exp) { return term(rational(1), exp); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] const std::map<long, Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of q^exp (zero if absent).
    [[nodiscard]] Rational coeff(long exp) const;

    /// If this is c * q^e for a single exponent e, return (c, e).
    [[nodiscard]] std::optional<std::pair<Rational, long>> as_single_term() const;

    [[nodiscard]] long min_exponent() const; // requires nonzero
    [[nodiscard]] long max_exponent() const; // requires nonzero

    LaurentQ& operator+=(const LaurentQ& rhs);
    LaurentQ& operator-=(const LaurentQ& rhs);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator-(const LaurentQ& a);
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    LaurentQ& operator*=(const LaurentQ& rhs) { return *this = *this * rhs; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }
    friend auto operator<=>(const LaurentQ& a, const LaurentQ& b) { return a.coeffs_ <=> b.coeffs_; }

    /// Substitute q -> q^{-1} (exponent negation).
    [[nodiscard]] LaurentQ invert_q() const;

    /// Evaluate at a nonzero rational point.
    [[nodiscard]] Rational evaluate(const Rational& point) const;

    /// Specialize q = 1 (sum of coefficients).
    [[nodiscard]] Rational at_q_one() const;

    /// Reduced textual form, exponents descending: "q^2 - 1", "-2*q^-1".
    [[nodiscard]] std::string str() const;

private:
    void set(long exp, const Rational& value);
    std::map<long, Rational> coeffs_;
};

/// The scalar (q - q^-1) appearing in the diagonal commutation relation.
LaurentQ q_minus_qinv();

} // namespace qgr
