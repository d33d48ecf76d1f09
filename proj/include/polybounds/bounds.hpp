#pragma once

#include <vector>

#include "polybounds/pi_constant.hpp"
#include "polybounds/series.hpp"

namespace polybounds {

enum class Target { wilker, sf_d3, sf_dpi, sf_e };
enum class Side { lower, upper };
// Domains are (0, b) with b tagged symbolically.
enum class RightEndpoint { half_pi, one };
enum class Denominator { one, two_plus_sqrt };

/// One side of a double-sided bound: an odd polynomial with exact PiConstant
/// coefficients, optionally divided by 2 + sqrt(1 - x^2). Degrees are
/// strictly increasing and zero coefficients are not stored.
struct OddPolyBound {
    std::vector<std::pair<unsigned, PiConstant>> terms;
    Side side = Side::lower;
    RightEndpoint right = RightEndpoint::one;
    Denominator denom = Denominator::one;

    /// Coefficient at `degree` (zero when absent).
    PiConstant coeff(unsigned degree) const;
};

struct BoundPair {
    Target target = Target::wilker;
    unsigned order = 0;
    OddPolyBound lower;
    OddPolyBound upper;
};

/// Generic double-sided construction over an odd-power series with all
/// coefficients supplied (negative ones, when present, are carried
/// identically on both sides):
///   lower = sum_{k<=n} coeffs[k] x^(2k+1)
///   upper = sum_{k<n} coeffs[k] x^(2k+1)
///           + (endpoint_value - sum_{k<n} coeffs[k] b^(2k+1)) (x/b)^(2n+1)
/// `b` must be a positive one-term constant (1 or pi/2 here); the tail
/// coefficient is kept exact as a PiConstant times b^-(2n+1).
BoundPair wd_bound_pair(const std::vector<PiConstant>& coeffs, unsigned n,
                        const PiConstant& endpoint_value, const PiConstant& b,
                        Target target = Target::wilker,
                        RightEndpoint right = RightEndpoint::one,
                        Denominator denom = Denominator::one);

/// Bounds for f(x) = 1/x + sin 2x/(2x^2) - 2 cot x - 8x^3/45 + 8x^5/945 on
/// (0, pi/2), order m >= 3 (below 3 both sides are identically zero).
BoundPair wilker_bounds(unsigned m);

/// Bounds for f_k(x) = arcsin x - kx/(2 + sqrt(1-x^2)) on (0, 1), n >= 1.
BoundPair sf_d_bounds(SfK k, unsigned n);

/// Denominator-form bounds for arcsin x - 3x/(2 + sqrt(1-x^2)) on (0, 1):
/// both sides are odd polynomials over 2 + sqrt(1-x^2), n >= 2.
BoundPair sf_e_bounds(unsigned n);

/// Evaluates a bound at x in its closed domain. The polynomial part is
/// assembled exactly (x is an exact binary rational), so the only rounding is
/// the final pi_eval and, for the denominator form, the sqrt and division;
/// total error is far inside the documented 8 + 2*degree ulp.
BigFloat eval_bound(const OddPolyBound& bound, const BigFloat& x, mpfr_prec_t precision);

/// Exact constant f(pi/2) - sum_{k=3}^{m} c_k (pi/2)^(2k+1); the gap between
/// the order-m Wilker bounds is this times (2x/pi)^(2m+1).
PiConstant wilker_gap_constant(unsigned m);

/// f(pi/2) = 2/pi - pi^3/45 + pi^5/3780 as an exact constant.
PiConstant wilker_endpoint_value();

/// The right endpoint of a bound's domain as an exact constant.
PiConstant right_endpoint_constant(RightEndpoint right);

}  // namespace polybounds
