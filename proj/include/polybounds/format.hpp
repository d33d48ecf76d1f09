#pragma once

#include <string>

#include "polybounds/bigfloat.hpp"
#include "polybounds/pi_constant.hpp"

namespace polybounds {

/// Canonical exact text form of a PiConstant. Terms in ascending pi-exponent
/// joined by " + " / " - "; rationals as "a/b" (omitting "/1"); pi powers as
/// "pi^e" with an explicit "*" between a non-unit coefficient and the power.
/// Examples: "16/14175", "1 - 1/3*pi^1", "2*pi^-1 - 1/45*pi^3 + 1/3780*pi^5".
/// Parsing the printed form reproduces the constant bit-for-bit.
std::string to_exact_string(const PiConstant& c);

/// Inverse of to_exact_string; also accepts "pi" as shorthand for "pi^1".
/// Throws std::invalid_argument on malformed input.
PiConstant parse_exact(const std::string& s);

/// `digits` significant decimal digits of c evaluated at `precision` bits,
/// rounded to nearest (ties to even).
std::string to_decimal_string(const PiConstant& c, mpfr_prec_t precision, size_t digits);

}  // namespace polybounds
