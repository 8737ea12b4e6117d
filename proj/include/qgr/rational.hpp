#pragma once

#include <gmpxx.h>
#include <string>

namespace qgr {

/// Exact rational scalar. GMP keeps the canonical form (reduced, positive
/// denominator) that all higher layers rely on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r);

} // namespace qgr
