#pragma once

#include <string>

#include "qgr/laurent.hpp"
#include "qgr/ratfunc.hpp"

namespace qgr {

/// Parse the textual scalar grammar used by str(): sums of terms built from
/// integers, q, ^integer powers, * and /, with parentheses. Throws
/// std::invalid_argument on malformed input.
RatFuncQ parse_ratfunc(const std::string& text);

/// Same grammar, but the result must be a Laurent polynomial
/// (denominator a power of q).
LaurentQ parse_laurent(const std::string& text);

} // namespace qgr
