#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace polybounds {

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1. All arithmetic is exact.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    BigRational(long n, long d);
    BigRational(const mpz_class& n, const mpz_class& d);
    explicit BigRational(const mpq_class& q);

    // Parses "a" or "a/b" with optional leading '-'. Throws std::invalid_argument.
    static BigRational from_string(const std::string& s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const;
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const;
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const BigRational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }
    BigRational reciprocal() const;
    // Integer power; negative exponents invert (throws on 0^negative).
    BigRational pow(long e) const;

    // "a" when the denominator is 1, else "a/b".
    std::string to_string() const;

  private:
    mpq_class v_;  // kept canonical at all times
};

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace polybounds
