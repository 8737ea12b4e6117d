#pragma once

#include <string>
#include <vector>

#include "qgr/rational.hpp"

namespace qgr {

/// Dense univariate polynomial in q over the rationals. Coefficient i is the
/// coefficient of q^i; the representation never carries leading zeros.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long constant) : PolyQ(rational(constant)) {}
    PolyQ(const Rational& constant);
    explicit PolyQ(std::vector<Rational> coeffs);

    static PolyQ monomial(const Rational& c, int degree);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] Rational leading_coeff() const;
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
    [[nodiscard]] std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

    [[nodiscard]] PolyQ monic() const; // requires nonzero
    [[nodiscard]] bool is_monic() const;

    /// Lowest exponent with nonzero coefficient (q-adic valuation).
    [[nodiscard]] int valuation() const; // requires nonzero

    [[nodiscard]] std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
PolyQ poly_gcd(PolyQ a, PolyQ b);

} // namespace qgr
