#pragma once

#include <optional>
#include <string>

#include "qgr/laurent.hpp"
#include "qgr/polyq.hpp"

namespace qgr {

/// Sign-and-exponent certificate produced by is_power_of_q.
struct QPower {
    long exponent = 0;
    bool negative = false;
    friend bool operator==(const QPower&, const QPower&) = default;
};

/// Element of the field Q(q), stored as a reduced fraction with monic
/// denominator. The representation is unique per field element, so equality
/// is structural.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(1) {}
    RatFuncQ(long value) : num_(value), den_(1) {}
    RatFuncQ(const Rational& value) : num_(value), den_(1) {}
    RatFuncQ(const PolyQ& numerator) : num_(numerator), den_(1) {}

    /// Reduce n/d to the canonical representative. Throws on d = 0.
    static RatFuncQ normalized(const PolyQ& numerator, const PolyQ& denominator);

    static RatFuncQ from_laurent(const LaurentQ& value);

    [[nodiscard]] const PolyQ& numerator() const { return num_; }
    [[nodiscard]] const PolyQ& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_ == PolyQ(1) && den_ == PolyQ(1); }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    RatFuncQ& operator+=(const RatFuncQ& rhs) { return *this = *this + rhs; }
    RatFuncQ& operator-=(const RatFuncQ& rhs) { return *this = *this - rhs; }
    RatFuncQ& operator*=(const RatFuncQ& rhs) { return *this = *this * rhs; }
    RatFuncQ& operator/=(const RatFuncQ& rhs) { return *this = *this / rhs; }

    [[nodiscard]] RatFuncQ inverse() const;

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    /// If this equals a Laurent polynomial (denominator a power of q),
    /// return it.
    [[nodiscard]] std::optional<LaurentQ> as_laurent() const;

    [[nodiscard]] std::string str() const;

private:
    RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {}
    PolyQ num_;
    PolyQ den_;
};

/// Certifies quasi-commutation constants: returns the exponent when
/// a = q^e or a = -q^e, nothing otherwise.
std::optional<QPower> is_power_of_q(const RatFuncQ& a);

} // namespace qgr
