#include "polybounds/pi_constant.hpp"

#include <cstdlib>

#include "polybounds/errors.hpp"

namespace polybounds {

PiConstant::PiConstant(const BigRational& q) {
    insert(0, q);
}

PiConstant PiConstant::pi_power(long e, const BigRational& q) {
    PiConstant c;
    c.insert(e, q);
    return c;
}

bool PiConstant::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

BigRational PiConstant::rational_part() const {
    return coeff(0);
}

BigRational PiConstant::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void PiConstant::insert(long e, const BigRational& q) {
    if (q.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, q);
    if (!fresh) {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PiConstant PiConstant::operator-() const {
    PiConstant r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, -q);
    return r;
}

PiConstant PiConstant::operator+(const PiConstant& o) const {
    PiConstant r = *this;
    for (const auto& [e, q] : o.terms_) r.insert(e, q);
    return r;
}

PiConstant PiConstant::operator-(const PiConstant& o) const {
    PiConstant r = *this;
    for (const auto& [e, q] : o.terms_) r.insert(e, -q);
    return r;
}

PiConstant PiConstant::operator*(const PiConstant& o) const {
    PiConstant r;
    for (const auto& [e1, q1] : terms_)
        for (const auto& [e2, q2] : o.terms_) r.insert(e1 + e2, q1 * q2);
    return r;
}

PiConstant PiConstant::pow(unsigned e) const {
    PiConstant r(BigRational(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

namespace {

// One evaluation pass at internal precision `work`. Returns the accumulated
// sum and a rigorous absolute error bound for it:
//   |sum_hat - sum| <= (n + max|e| + 4) * 2^-work * S,   S = sum |term_hat|.
struct EvalPass {
    BigFloat value;
    BigFloat error;
};

EvalPass eval_terms(const std::map<long, BigRational>& terms, mpfr_prec_t work) {
    BigFloat pi = BigFloat::pi(work);
    BigFloat sum(work);
    BigFloat mag(work);  // S, running sum of |term|
    long max_abs_e = 0;
    for (const auto& [e, q] : terms) {
        BigFloat t = BigFloat::from_rational(q, work);
        if (e != 0) t = mul(t, pow_si(pi, e, work), work);
        sum = add(sum, t, work);
        mag = add(mag, t.abs(), work);
        max_abs_e = std::max(max_abs_e, std::labs(e));
    }
    const long k = static_cast<long>(terms.size()) + max_abs_e + 4;
    // 2*k covers the (tiny) rounding of the bound computation itself.
    BigFloat err = mul(BigFloat::from_long(2 * k, 64), mag, 64).mul_2si(-work);
    return {std::move(sum), std::move(err)};
}

}  // namespace

BigFloat pi_eval(const PiConstant& c, mpfr_prec_t precision) {
    if (precision < 2) precision = 2;
    if (c.is_zero()) return BigFloat(precision);
    if (c.is_rational()) return BigFloat::from_rational(c.rational_part(), precision);

    // Escalate guard bits until the pass error fits in a quarter ulp of the
    // target precision; the final rounding then brings the total under 1 ulp.
    for (mpfr_prec_t guard = 64;; guard *= 2) {
        EvalPass pass = eval_terms(c.terms(), precision + guard);
        if (pass.value.is_zero()) continue;  // drowned in cancellation; retry wider
        BigFloat quarter_ulp = BigFloat::from_long(1, 32).mul_2si(pass.value.exponent() - precision - 2);
        if (pass.error < quarter_ulp) return pass.value.round_to(precision);
    }
}

int pi_sign(const PiConstant& c, mpfr_prec_t cap_bits) {
    if (c.is_zero()) return 0;
    if (c.terms().size() == 1) return c.terms().begin()->second.sign();

    for (mpfr_prec_t work = 64; work <= cap_bits; work *= 2) {
        EvalPass pass = eval_terms(c.terms(), work);
        if (!pass.value.is_zero() && pass.value.abs() > pass.error) return pass.value.sign();
    }
    throw PrecisionCapExceeded("pi_sign: value not resolvable within " +
                               std::to_string(cap_bits) + " bits");
}

}  // namespace polybounds
