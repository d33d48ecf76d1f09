#include "polybounds/oracle.hpp"

#include <stdexcept>

#include "polybounds/bernoulli.hpp"
#include "polybounds/errors.hpp"

namespace polybounds {

TargetFn target_fn(TargetId id) {
    return {id, id == TargetId::wilker ? RightEndpoint::half_pi : RightEndpoint::one};
}

namespace {

// Extra working bits to absorb the cancellation of the three O(1/x) terms of
// the wilker target: the result is O(x^7), so ~8 bits are lost per leading
// zero bit of x (7 from the x^7, one from the 1/x magnitude).
mpfr_prec_t wilker_escalation(const BigFloat& x) {
    if (x.exponent() >= 1) return 0;
    return 8 * static_cast<mpfr_prec_t>(1 - x.exponent());
}

BigFloat eval_wilker(const BigFloat& x, mpfr_prec_t precision) {
    const mpfr_prec_t work = precision + 48 + wilker_escalation(x);

    BigFloat s(work), c(work);
    sin_cos(x, s, c, work);
    const BigFloat sin2x = mul(s, c, work).mul_2si(1);
    const BigFloat cot = div(c, s, work);

    const BigFloat x2 = mul(x, x, work);
    const BigFloat x3 = mul(x2, x, work);
    const BigFloat x5 = mul(x3, x2, work);

    BigFloat r = div(BigFloat::from_long(1, work), x, work);
    r = add(r, div(sin2x, x2.mul_2si(1), work), work);
    r = sub(r, cot.mul_2si(1), work);
    r = sub(r, mul(BigFloat::from_rational(BigRational(8, 45), work), x3, work), work);
    r = add(r, mul(BigFloat::from_rational(BigRational(8, 945), work), x5, work), work);
    return r.round_to(precision);
}

BigFloat eval_shafer_fink(TargetId id, const BigFloat& x, mpfr_prec_t precision) {
    const bool k_is_pi = id == TargetId::sf_dpi;
    if (x == BigFloat::from_long(1, 2)) {
        // Closure limit: arcsin 1 - k/2 = pi/2 - k/2.
        if (k_is_pi) return BigFloat(precision);
        const mpfr_prec_t work = precision + 32;
        return sub(BigFloat::pi(work).mul_2si(-1), BigFloat::from_rational(BigRational(3, 2), work),
                   precision);
    }

    // arcsin x and kx/(2+sqrt(1-x^2)) agree to O(sqrt(1-x)) near 1, and to
    // O(x^5)/O(x) near 0 for k = 3; escalate against both.
    mpfr_prec_t extra = 0;
    if (x.exponent() <= -1) extra += 4 * static_cast<mpfr_prec_t>(1 - x.exponent());
    const BigFloat d1 = sub(BigFloat::from_long(1, 64), x, std::max<mpfr_prec_t>(x.prec() + 2, 64));
    if (!d1.is_zero() && d1.exponent() <= -1) extra += static_cast<mpfr_prec_t>(1 - d1.exponent());
    const mpfr_prec_t work = precision + 48 + extra;

    // 1 - x^2 as (1-x)(1+x): the subtraction is exact for x in [1/2, 1).
    const BigFloat u = mul(sub(BigFloat::from_long(1, work), x, work),
                           add(BigFloat::from_long(1, work), x, work), work);
    const BigFloat den = add(BigFloat::from_long(2, work), sqrt(u, work), work);
    const BigFloat k = k_is_pi ? BigFloat::pi(work) : BigFloat::from_long(3, work);
    const BigFloat r = sub(asin(x, work), div(mul(k, x, work), den, work), work);
    return r.round_to(precision);
}

}  // namespace

BigFloat eval_target(TargetId fn, const BigFloat& x, mpfr_prec_t precision) {
    if (precision < 32) throw std::invalid_argument("eval_target: precision must be >= 32");
    if (x.sign() <= 0) throw DomainViolation("eval_target: x must be > 0");

    if (fn == TargetId::wilker) {
        const BigFloat half_pi = BigFloat::pi(x.prec() + 64).mul_2si(-1);
        if (x >= half_pi) throw DomainViolation("eval_target: x must be < pi/2");
        return eval_wilker(x, precision);
    }
    if (x > BigFloat::from_long(1, 2)) throw DomainViolation("eval_target: x must be <= 1");
    return eval_shafer_fink(fn, x, precision);
}

std::vector<PiConstant> taylor_head(TargetId fn, unsigned terms) {
    if (fn != TargetId::wilker)
        throw std::invalid_argument("taylor_head: only the wilker target has a head here");
    if (terms > 200) throw std::invalid_argument("taylor_head: terms must be <= 200");

    std::vector<BigRational> res(terms, BigRational(0));

    // sin 2x = sum_{j>=1} (-1)^(j+1) 2^(2j-1)/(2j-1)! x^(2j-1); dividing by
    // 2x^2 puts term j at degree 2j-3. cot x = (1/x)(1 - sum_{k>=1}
    // |B_2k| 2^(2k)/(2k)! x^(2k)). The three 1/x contributions cancel:
    // 1 + (sin-series j=1)/2 - 2(x cot x at 0) = 1 + 1 - 2.
    for (unsigned j = 2; j <= terms + 1; ++j) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * j - 1);
        BigRational a(p2, factorial(2 * j - 1));
        if (j % 2 == 0) a = -a;
        res[j - 2] += a / BigRational(2);
    }
    for (unsigned k = 1; k <= terms; ++k) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * k);
        res[k - 1] += BigRational(2) * bernoulli(2 * k).abs() * BigRational(p2, factorial(2 * k));
    }
    if (terms > 1) res[1] -= BigRational(8, 45);
    if (terms > 2) res[2] += BigRational(8, 945);

    std::vector<PiConstant> out;
    out.reserve(terms);
    for (const auto& q : res) out.emplace_back(q);
    return out;
}

}  // namespace polybounds
