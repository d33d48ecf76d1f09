#pragma once

#include <vector>

#include "polybounds/bigfloat.hpp"
#include "polybounds/bounds.hpp"
#include "polybounds/pi_constant.hpp"

namespace polybounds {

/// The reference functions the bounds are verified against.
enum class TargetId { wilker, sf_d3, sf_dpi, sf_e_lhs };

struct TargetFn {
    TargetId id;
    RightEndpoint domain_right;  // domain is (0, pi/2) for wilker, (0, 1) otherwise
};

TargetFn target_fn(TargetId id);

/// High-precision reference value, correct to within 16 ulp at `precision`:
///   wilker:  1/x + sin 2x/(2x^2) - 2 cot x - 8x^3/45 + 8x^5/945
///   sf_d3 / sf_e_lhs:  arcsin x - 3x/(2 + sqrt(1-x^2))
///   sf_dpi:  arcsin x - pi x/(2 + sqrt(1-x^2))
/// x must lie strictly inside the domain (x = 1 is additionally accepted for
/// the Shafer-Fink targets and returns the closure limit). The wilker sum
/// cancels down to O(x^7) near 0, so the internal working precision is
/// escalated by 8 bits per leading zero bit of x; the Shafer-Fink targets
/// escalate near both endpoints the same way.
BigFloat eval_target(TargetId fn, const BigFloat& x, mpfr_prec_t precision);

/// First `terms` odd-power Taylor coefficients of the wilker target at 0,
/// derived by composing the classical series for sin 2x and x cot x with
/// exact arithmetic -- an independent route to the same numbers as wilker_c.
/// Only TargetId::wilker is admissible; terms <= 200.
std::vector<PiConstant> taylor_head(TargetId fn, unsigned terms);

}  // namespace polybounds
