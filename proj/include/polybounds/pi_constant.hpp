#pragma once

#include <map>
#include <vector>

#include "polybounds/bigfloat.hpp"
#include "polybounds/rational.hpp"

namespace polybounds {

/// Exact element of the ring of Laurent polynomials in pi over the rationals:
/// a finite sum  sum_e q_e * pi^e  with integer exponents e (possibly negative).
/// Canonical form stores no zero coefficient, so exact equality is the
/// term-by-term comparison of the maps. Closed under +, -, *.
class PiConstant {
  public:
    PiConstant() = default;
    PiConstant(const BigRational& q);  // NOLINT: implicit on purpose
    PiConstant(long n) : PiConstant(BigRational(n)) {}  // NOLINT

    /// q * pi^e as a one-term constant.
    static PiConstant pi_power(long e, const BigRational& q = BigRational(1));

    const std::map<long, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Coefficient at exponent 0 (the whole value if is_rational()).
    BigRational rational_part() const;
    BigRational coeff(long e) const;

    PiConstant operator-() const;
    PiConstant operator+(const PiConstant& o) const;
    PiConstant operator-(const PiConstant& o) const;
    PiConstant operator*(const PiConstant& o) const;
    PiConstant& operator+=(const PiConstant& o) { return *this = *this + o; }
    PiConstant& operator-=(const PiConstant& o) { return *this = *this - o; }
    PiConstant& operator*=(const PiConstant& o) { return *this = *this * o; }

    /// Nonnegative integer power by repeated multiplication.
    PiConstant pow(unsigned e) const;

    bool operator==(const PiConstant& o) const { return terms_ == o.terms_; }

  private:
    void insert(long e, const BigRational& q);

    std::map<long, BigRational> terms_;
};

/// Numeric value of `c` at `precision` bits, within 4 ulp of the true value.
/// Internally evaluates with escalating guard bits until a rigorous error
/// bound fits in a quarter ulp of the target precision, then rounds once.
BigFloat pi_eval(const PiConstant& c, mpfr_prec_t precision);

/// Exact sign of the real number `c`. Empty sum is 0; a one-term constant has
/// the sign of its rational coefficient; a multi-term canonical constant is
/// never exactly zero (pi is transcendental), so its sign is decided by
/// evaluating at doubling precision until the rigorous enclosure excludes 0.
/// Throws PrecisionCapExceeded once the working precision passes `cap_bits`.
int pi_sign(const PiConstant& c, mpfr_prec_t cap_bits = (1L << 20));

}  // namespace polybounds
