#pragma once

#include <utility>
#include <vector>

#include "polybounds/bigfloat.hpp"
#include "polybounds/bounds.hpp"

namespace polybounds {

/// Outcome of sampling a BoundPair against its oracle on a strictly interior
/// uniform grid. `verified` is only reported when both minimum margins exceed
/// the accumulated evaluation error budget at every point; `violated` only
/// when some margin is negative beyond that budget; anything in between is
/// `indeterminate` (escalate the precision and retry).
struct VerificationReport {
    enum class Status { verified, indeterminate, violated };

    Target target = Target::wilker;
    unsigned order = 0;
    unsigned grid_points = 0;
    mpfr_prec_t precision_bits = 0;
    BigFloat min_lower_margin;  // min over grid of oracle - lower
    BigFloat min_upper_margin;  // min over grid of upper - oracle
    BigFloat max_gap;           // max over grid of upper - lower
    BigFloat argmax_x;
    Status status = Status::indeterminate;
};

const char* to_string(VerificationReport::Status s);

/// Samples x_i = b*i/(grid_points+1) for i = 1..grid_points and classifies
/// the strict ordering lower < oracle < upper per the report invariants.
/// Deterministic for fixed inputs. grid_points >= 2.
VerificationReport verify_pair(const BoundPair& pair, unsigned grid_points, mpfr_prec_t precision);

struct ErrorTableRow {
    unsigned m = 0;
    BigFloat sup_gap;
};

/// sup over (0, pi/2) of the order-m Wilker gap R_m. The gap constant is
/// certified positive via pi_sign, which makes R_m increasing, so the sup is
/// its endpoint limit pi_eval(wilker_gap_constant(m)); a golden-section
/// search is the fallback if the certificate ever failed.
std::vector<ErrorTableRow> wilker_error_table(const std::vector<unsigned>& orders,
                                              mpfr_prec_t precision);

/// Maximizes upper - lower over the domain: 1024-point scan, then
/// golden-section down to an x-tolerance of b*2^(-precision/2).
/// Returns (argmax, gap value).
std::pair<BigFloat, BigFloat> max_gap(const BoundPair& pair, mpfr_prec_t precision);

}  // namespace polybounds
