#include "polybounds/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace polybounds {

BigFloat::BigFloat(mpfr_prec_t prec) {
    if (prec < MPFR_PREC_MIN) prec = MPFR_PREC_MIN;
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_ulong(unsigned long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const BigRational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_decimal(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::operator+(const BigFloat& o) const { return add(*this, o, joint_prec(*this, o)); }
BigFloat BigFloat::operator-(const BigFloat& o) const { return sub(*this, o, joint_prec(*this, o)); }
BigFloat BigFloat::operator*(const BigFloat& o) const { return mul(*this, o, joint_prec(*this, o)); }
BigFloat BigFloat::operator/(const BigFloat& o) const { return div(*this, o, joint_prec(*this, o)); }

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_2si(long e) const {
    BigFloat r(prec());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::round_to(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(size_t digits) const {
    if (digits == 0) digits = 1;
    if (mpfr_zero_p(v_)) return "0";
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
    if (raw == nullptr) throw std::runtime_error("BigFloat: mpfr_get_str failed");
    std::string mant(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }

    // value = 0.mant * 10^exp10
    std::string out;
    const long e = static_cast<long>(exp10);
    const long n = static_cast<long>(mant.size());
    if (e >= -5 && e <= n + 6) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
        } else if (e >= n) {
            out = mant + std::string(static_cast<size_t>(e - n), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
        }
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return sign + out;
}

#define POLYBOUNDS_BINOP(name, fn)                                              \
    BigFloat name(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec) {     \
        BigFloat r(prec);                                                       \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                               \
        return r;                                                               \
    }

POLYBOUNDS_BINOP(add, mpfr_add)
POLYBOUNDS_BINOP(sub, mpfr_sub)
POLYBOUNDS_BINOP(mul, mpfr_mul)
POLYBOUNDS_BINOP(div, mpfr_div)
#undef POLYBOUNDS_BINOP

BigFloat sqrt(const BigFloat& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat asin(const BigFloat& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_asin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c, mpfr_prec_t prec) {
    BigFloat rs(prec), rc(prec);
    mpfr_sin_cos(rs.raw(), rc.raw(), x.raw(), MPFR_RNDN);
    s = std::move(rs);
    c = std::move(rc);
}

BigFloat pow_si(const BigFloat& x, long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace polybounds
