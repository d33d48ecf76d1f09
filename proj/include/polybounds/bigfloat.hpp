#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "polybounds/rational.hpp"

namespace polybounds {

/// Arbitrary-precision binary float with an explicit precision in bits.
///
/// Every arithmetic operation here rounds to nearest (ties to even) at the
/// result's precision and is therefore within 0.5 ulp of the exact result;
/// that is the per-operation worst case the evaluation error budgets in
/// `eval_bound`, `eval_target` and `verify_pair` are built from. Comparisons
/// act on the representations and are exact.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, mpfr_prec_t prec);
    static BigFloat from_ulong(unsigned long v, mpfr_prec_t prec);
    static BigFloat from_double(double v, mpfr_prec_t prec);
    // Correctly rounded value of an exact rational.
    static BigFloat from_rational(const BigRational& q, mpfr_prec_t prec);
    // Correctly rounded value of a decimal string like "0.0019150112".
    static BigFloat from_decimal(const std::string& s, mpfr_prec_t prec);
    // pi correct to 0.5 ulp at `prec` (the only transcendental constant used).
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent e with |x| in [2^(e-1), 2^e); only valid for nonzero values.
    mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Result carried at max(prec(), o.prec()).
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    BigFloat abs() const;
    // Exact scaling by 2^e (no rounding).
    BigFloat mul_2si(long e) const;
    // Re-round to a target precision (0.5 ulp).
    BigFloat round_to(mpfr_prec_t prec) const;

    bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }
    std::strong_ordering operator<=>(const BigFloat& o) const {
        int c = mpfr_cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Decimal string with exactly `digits` significant digits, rounded to
    /// nearest (ties to even). Fixed-point notation in a moderate exponent
    /// range, otherwise "d.dd...e±k".
    std::string to_string(size_t digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

// Correctly rounded operations at an explicit result precision.
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec);
BigFloat sqrt(const BigFloat& x, mpfr_prec_t prec);
BigFloat asin(const BigFloat& x, mpfr_prec_t prec);
void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c, mpfr_prec_t prec);
// x^e, correctly rounded (e may be negative).
BigFloat pow_si(const BigFloat& x, long e, mpfr_prec_t prec);

}  // namespace polybounds
