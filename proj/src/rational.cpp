#include "polybounds/rational.hpp"

#include <stdexcept>

namespace polybounds {

BigRational::BigRational(long n, long d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
    // mpq's reader skips whitespace, so pre-screen the token shape.
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
        throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
    q.canonicalize();
    return BigRational(q);
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    return BigRational(mpq_class(v_ / o.v_));
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
    return BigRational(denominator(), numerator());
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    const BigRational base = e < 0 ? reciprocal() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), n);
    BigRational r;
    r.v_ = mpq_class(num, den);  // base canonical => power canonical
    return r;
}

std::string BigRational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace polybounds
