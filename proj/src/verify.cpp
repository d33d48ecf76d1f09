#include "polybounds/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "polybounds/oracle.hpp"

namespace polybounds {

namespace {

TargetId oracle_for(Target t) {
    switch (t) {
        case Target::wilker: return TargetId::wilker;
        case Target::sf_d3: return TargetId::sf_d3;
        case Target::sf_dpi: return TargetId::sf_dpi;
        case Target::sf_e: return TargetId::sf_e_lhs;
    }
    throw std::logic_error("oracle_for: bad target");
}

// A bound with coefficients pre-rounded to the working precision, plus the
// bookkeeping for a rigorous per-point error bound: alongside the Horner
// value we run the same recurrence on |coefficients|, whose result M
// majorizes every intermediate magnitude, so the accumulated rounding error
// is below K * 2^-work * M with K = 2*(rounding ops) + slack.
struct PreparedBound {
    std::vector<unsigned> degs;  // descending
    std::vector<BigFloat> coeffs;
    std::vector<BigFloat> abs_coeffs;
    Denominator denom = Denominator::one;
    mpfr_prec_t work = 0;
    long err_factor = 0;  // 2*K, the factor-2 safety already folded in

    struct Eval {
        BigFloat value;
        BigFloat error;  // rigorous absolute bound, >= |value_hat - value|
    };
    Eval eval(const BigFloat& x) const;
};

PreparedBound prepare(const OddPolyBound& bound, mpfr_prec_t work) {
    PreparedBound p;
    p.denom = bound.denom;
    p.work = work;
    long ops = 4;
    for (auto it = bound.terms.rbegin(); it != bound.terms.rend(); ++it) {
        p.degs.push_back(it->first);
        p.coeffs.push_back(pi_eval(it->second, work));
        p.abs_coeffs.push_back(p.coeffs.back().abs());
        ops += 2;
    }
    if (!p.degs.empty()) ops += (p.degs.front() - p.degs.back()) / 2;
    ops += 20;              // coefficient rounding (4 ulp each) and the denominator path
    p.err_factor = 4 * ops; // doubled twice: once for slack, once for the 2^(1-p) ulp bound
    return p;
}

PreparedBound::Eval PreparedBound::eval(const BigFloat& x) const {
    const mpfr_prec_t w = work;
    if (degs.empty()) return {BigFloat(w), BigFloat(w)};

    const BigFloat t = mul(x, x, w);
    BigFloat acc(w), mag(w);
    unsigned prev = degs.front();
    for (size_t i = 0; i < degs.size(); ++i) {
        for (unsigned d = degs[i]; d < prev; d += 2) {
            acc = mul(acc, t, w);
            mag = mul(mag, t, w);
        }
        acc = add(acc, coeffs[i], w);
        mag = add(mag, abs_coeffs[i], w);
        prev = degs[i];
    }
    const BigFloat xp = pow_si(x, degs.back(), w);
    BigFloat value = mul(acc, xp, w);
    BigFloat m = mul(mag, xp, w);

    if (denom == Denominator::two_plus_sqrt) {
        const BigFloat u = mul(sub(BigFloat::from_long(1, w), x, w),
                               add(BigFloat::from_long(1, w), x, w), w);
        const BigFloat s = add(BigFloat::from_long(2, w), sqrt(u, w), w);
        value = div(value, s, w);
    }
    BigFloat error = mul(BigFloat::from_long(err_factor, 64), m, 64).mul_2si(-w);
    return {std::move(value), std::move(error)};
}

}  // namespace

const char* to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::verified: return "verified";
        case VerificationReport::Status::indeterminate: return "indeterminate";
        case VerificationReport::Status::violated: return "violated";
    }
    return "?";
}

VerificationReport verify_pair(const BoundPair& pair, unsigned grid_points, mpfr_prec_t precision) {
    if (grid_points < 2) throw std::invalid_argument("verify_pair: grid must be >= 2");
    if (precision < 32) throw std::invalid_argument("verify_pair: precision must be >= 32");

    const mpfr_prec_t work = precision + 32;
    const PreparedBound lower = prepare(pair.lower, work);
    const PreparedBound upper = prepare(pair.upper, work);
    const BigFloat b = pi_eval(right_endpoint_constant(pair.lower.right), work);
    const BigFloat denom = BigFloat::from_ulong(grid_points + 1, work);
    const TargetId oracle = oracle_for(pair.target);

    VerificationReport rep;
    rep.target = pair.target;
    rep.order = pair.order;
    rep.grid_points = grid_points;
    rep.precision_bits = precision;

    bool any_indeterminate = false;
    bool any_violated = false;
    bool first = true;

    // 16 ulp of the oracle value, expressed through its binary exponent.
    const BigFloat one64 = BigFloat::from_long(1, 64);
    for (unsigned i = 1; i <= grid_points; ++i) {
        const BigFloat x = div(mul(b, BigFloat::from_ulong(i, work), work), denom, work);
        const BigFloat f = eval_target(oracle, x, precision);
        const auto lo = lower.eval(x);
        const auto up = upper.eval(x);

        BigFloat budget = add(lo.error, up.error, 64);
        if (!f.is_zero()) budget = add(budget, one64.mul_2si(f.exponent() - precision + 5), 64);
        // margin subtraction rounding, two ops at `precision`
        BigFloat sum_mag = add(add(f.abs(), lo.value.abs(), 64), up.value.abs(), 64);
        budget = add(budget, sum_mag.mul_2si(3 - static_cast<long>(precision)), 64);

        const BigFloat margin_lower = sub(f, lo.value, precision);
        const BigFloat margin_upper = sub(up.value, f, precision);
        const BigFloat gap = sub(up.value, lo.value, precision);

        if (margin_lower < -budget || margin_upper < -budget) any_violated = true;
        else if (!(margin_lower > budget) || !(margin_upper > budget)) any_indeterminate = true;

        if (first || margin_lower < rep.min_lower_margin) rep.min_lower_margin = margin_lower;
        if (first || margin_upper < rep.min_upper_margin) rep.min_upper_margin = margin_upper;
        if (first || gap > rep.max_gap) {
            rep.max_gap = gap;
            rep.argmax_x = x.round_to(precision);
        }
        first = false;
    }

    rep.status = any_violated     ? VerificationReport::Status::violated
                 : any_indeterminate ? VerificationReport::Status::indeterminate
                                     : VerificationReport::Status::verified;
    return rep;
}

std::vector<ErrorTableRow> wilker_error_table(const std::vector<unsigned>& orders,
                                              mpfr_prec_t precision) {
    std::vector<ErrorTableRow> rows;
    rows.reserve(orders.size());
    for (unsigned m : orders) {
        const PiConstant g = wilker_gap_constant(m);  // throws OrderTooSmall below 3
        if (pi_sign(g) > 0) {
            rows.push_back({m, pi_eval(g, precision)});
        } else {
            rows.push_back({m, max_gap(wilker_bounds(m), precision).second});
        }
    }
    return rows;
}

std::pair<BigFloat, BigFloat> max_gap(const BoundPair& pair, mpfr_prec_t precision) {
    const mpfr_prec_t work = precision + 32;
    const PreparedBound lower = prepare(pair.lower, work);
    const PreparedBound upper = prepare(pair.upper, work);
    const BigFloat b = pi_eval(right_endpoint_constant(pair.lower.right), work);

    auto gap_at = [&](const BigFloat& x) { return sub(upper.eval(x).value, lower.eval(x).value, work); };

    // Seed scan over [0, b] (the gap is a polynomial expression, defined on
    // the closed interval even though the theorems live on the open one).
    const unsigned kScan = 1024;
    unsigned best = 0;
    BigFloat best_gap(work);
    std::vector<BigFloat> xs;
    xs.reserve(kScan + 1);
    for (unsigned i = 0; i <= kScan; ++i) {
        xs.push_back(div(mul(b, BigFloat::from_ulong(i, work), work),
                         BigFloat::from_ulong(kScan, work), work));
        const BigFloat g = gap_at(xs.back());
        if (i == 0 || g > best_gap) {
            best_gap = g;
            best = i;
        }
    }

    BigFloat lo = xs[best == 0 ? 0 : best - 1];
    BigFloat hi = xs[std::min(best + 1, kScan)];
    const BigFloat tol = b.mul_2si(-static_cast<long>(precision / 2));
    // Golden-section: keep the ratio, track the two interior probes.
    const BigFloat inv_phi = div(sub(sqrt(BigFloat::from_long(5, work), work),
                                     BigFloat::from_long(1, work), work),
                                 BigFloat::from_long(2, work), work);
    BigFloat width = sub(hi, lo, work);
    BigFloat x1 = sub(hi, mul(inv_phi, width, work), work);
    BigFloat x2 = add(lo, mul(inv_phi, width, work), work);
    BigFloat g1 = gap_at(x1), g2 = gap_at(x2);
    while (width > tol) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            width = sub(hi, lo, work);
            x2 = add(lo, mul(inv_phi, width, work), work);
            g2 = gap_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            width = sub(hi, lo, work);
            x1 = sub(hi, mul(inv_phi, width, work), work);
            g1 = gap_at(x1);
        }
    }
    const BigFloat xstar = g1 < g2 ? x2 : x1;
    const BigFloat gstar = g1 < g2 ? g2 : g1;
    if (gstar < best_gap) return {xs[best].round_to(precision), best_gap.round_to(precision)};
    return {xstar.round_to(precision), gstar.round_to(precision)};
}

}  // namespace polybounds
