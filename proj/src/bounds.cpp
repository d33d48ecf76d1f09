#include "polybounds/bounds.hpp"

#include <stdexcept>

#include "polybounds/errors.hpp"

namespace polybounds {

namespace {

// Inverse of a positive one-term constant q*pi^e.
PiConstant invert_single_term(const PiConstant& b) {
    if (b.terms().size() != 1)
        throw std::invalid_argument("wd_bound_pair: b must be a one-term constant");
    const auto& [e, q] = *b.terms().begin();
    if (q.sign() <= 0) throw std::invalid_argument("wd_bound_pair: b must be positive");
    return PiConstant::pi_power(-e, q.reciprocal());
}

void push_term(std::vector<std::pair<unsigned, PiConstant>>& terms, unsigned degree,
               const PiConstant& coeff) {
    if (!coeff.is_zero()) terms.emplace_back(degree, coeff);
}

}  // namespace

PiConstant OddPolyBound::coeff(unsigned degree) const {
    for (const auto& [d, c] : terms)
        if (d == degree) return c;
    return PiConstant();
}

BoundPair wd_bound_pair(const std::vector<PiConstant>& coeffs, unsigned n,
                        const PiConstant& endpoint_value, const PiConstant& b,
                        Target target, RightEndpoint right, Denominator denom) {
    if (n < 1) throw OrderTooSmall("wd_bound_pair: n must be >= 1");
    if (coeffs.size() < n + 1)
        throw InsufficientCoefficients("wd_bound_pair: need coefficients 0.." + std::to_string(n));

    BoundPair pair;
    pair.target = target;
    pair.order = n;
    pair.lower.side = Side::lower;
    pair.upper.side = Side::upper;
    pair.lower.right = pair.upper.right = right;
    pair.lower.denom = pair.upper.denom = denom;

    PiConstant head_at_b;  // sum_{k<n} coeffs[k] b^(2k+1)
    for (unsigned k = 0; k < n; ++k) {
        push_term(pair.lower.terms, 2 * k + 1, coeffs[k]);
        push_term(pair.upper.terms, 2 * k + 1, coeffs[k]);
        head_at_b += coeffs[k] * b.pow(2 * k + 1);
    }
    push_term(pair.lower.terms, 2 * n + 1, coeffs[n]);

    const PiConstant tail = (endpoint_value - head_at_b) * invert_single_term(b).pow(2 * n + 1);
    push_term(pair.upper.terms, 2 * n + 1, tail);
    return pair;
}

PiConstant wilker_endpoint_value() {
    return PiConstant::pi_power(-1, BigRational(2)) + PiConstant::pi_power(3, BigRational(-1, 45)) +
           PiConstant::pi_power(5, BigRational(1, 3780));
}

PiConstant right_endpoint_constant(RightEndpoint right) {
    return right == RightEndpoint::half_pi ? PiConstant::pi_power(1, BigRational(1, 2))
                                           : PiConstant(BigRational(1));
}

BoundPair wilker_bounds(unsigned m) {
    if (m < 3) throw OrderTooSmall("wilker_bounds: order must be >= 3");
    std::vector<PiConstant> coeffs;
    coeffs.reserve(m + 1);
    for (unsigned k = 0; k <= m; ++k) coeffs.push_back(wilker_c(k));
    return wd_bound_pair(coeffs, m, wilker_endpoint_value(),
                         right_endpoint_constant(RightEndpoint::half_pi), Target::wilker,
                         RightEndpoint::half_pi, Denominator::one);
}

BoundPair sf_d_bounds(SfK k, unsigned n) {
    if (n < 1) throw OrderTooSmall("sf_d_bounds: order must be >= 1");
    std::vector<PiConstant> coeffs;
    coeffs.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) coeffs.push_back(sf_d(k, m));
    // f_k(1) = pi/2 - k/2: exactly pi/2 - 3/2 for k = 3 and 0 for k = pi.
    PiConstant endpoint;
    if (k == SfK::three)
        endpoint = PiConstant::pi_power(1, BigRational(1, 2)) + PiConstant(BigRational(-3, 2));
    return wd_bound_pair(coeffs, n, endpoint, right_endpoint_constant(RightEndpoint::one),
                         k == SfK::three ? Target::sf_d3 : Target::sf_dpi, RightEndpoint::one,
                         Denominator::one);
}

BoundPair sf_e_bounds(unsigned n) {
    if (n < 2) throw OrderTooSmall("sf_e_bounds: order must be >= 2");
    // Numerator series of (2 + sqrt(1-x^2)) arcsin x - 3x: the x^1 and x^3
    // coefficients vanish; E(0) = 3 only enters through the endpoint value
    // pi - 3 = g(1-), reproducing the tail constant pi - sum_{m<n} E(m).
    std::vector<PiConstant> coeffs(2);
    coeffs.reserve(n + 1);
    for (unsigned m = 2; m <= n; ++m) coeffs.push_back(sf_e(m));
    const PiConstant endpoint = PiConstant::pi_power(1) + PiConstant(BigRational(-3));
    return wd_bound_pair(coeffs, n, endpoint, right_endpoint_constant(RightEndpoint::one),
                         Target::sf_e, RightEndpoint::one, Denominator::two_plus_sqrt);
}

BigFloat eval_bound(const OddPolyBound& bound, const BigFloat& x, mpfr_prec_t precision) {
    if (precision < 16) throw std::invalid_argument("eval_bound: precision must be >= 16");
    const mpfr_prec_t work = precision + 32;

    const BigFloat zero(work);
    if (x < zero) throw DomainViolation("eval_bound: x below domain");
    const BigFloat b = pi_eval(right_endpoint_constant(bound.right), work);
    if (x > b) throw DomainViolation("eval_bound: x above domain");

    // x is an exact binary rational, so the polynomial part assembles exactly.
    mpq_class xq;
    mpfr_get_q(xq.get_mpq_t(), x.raw());
    const BigRational xr(xq);
    PiConstant poly;
    for (const auto& [deg, c] : bound.terms) poly += c * PiConstant(xr.pow(static_cast<long>(deg)));

    BigFloat value = pi_eval(poly, bound.denom == Denominator::one ? precision : work);
    if (bound.denom == Denominator::two_plus_sqrt) {
        const BigRational d = BigRational(1) - xr * xr;
        const BigFloat s = sqrt(BigFloat::from_rational(d, work), work);
        value = div(value, add(BigFloat::from_long(2, work), s, work), precision);
    }
    return value.round_to(precision);
}

PiConstant wilker_gap_constant(unsigned m) {
    if (m < 3) throw OrderTooSmall("wilker_gap_constant: order must be >= 3");
    PiConstant g = wilker_endpoint_value();
    const PiConstant half_pi = right_endpoint_constant(RightEndpoint::half_pi);
    for (unsigned k = 3; k <= m; ++k) g -= wilker_c(k) * half_pi.pow(2 * k + 1);
    return g;
}

}  // namespace polybounds
