#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polybounds/pi_constant.hpp"

namespace polybounds {

/// The k parameter of the Shafer-Fink gap function: k = 3 or k = pi.
enum class SfK { three, pi };

enum class SeqId { wilker_c, sf_d3, sf_dpi, sf_e };

/// Coefficient of x^(2k+1) in the Wilker gap series: 0 for k <= 2, and
///   2^(2k+2) * ((4k+6)|B_(2k+2)| + (-1)^(k+1)) / (2k+3)!
/// for k >= 3. Purely rational, memoized, exact.
PiConstant wilker_c(unsigned k);

/// Shafer-Fink coefficient D_k(m):
///   (2m)!/((m!)^2 (2m+1) 2^(2m))
///   - ( (-1)^m k / 3^(m+1) + sum_{i<m} k (-1)^(m-1-i) (2i)! / (3^(m-i) i! (i+1)! 2^(2i+1)) )
/// with k substituted exactly (3, or pi as a one-term constant). For k = 3
/// this gives D(0) = D(1) = 0; for k = pi both are nonzero and negative.
PiConstant sf_d(SfK k, unsigned m);

/// Shafer-Fink denominator-form coefficient E(m). E(0) = 3 and E(1) = 0 by
/// convention (the values that make the upper-bound tail constant
/// pi - sum_{m<n} E(m) come out right); for m >= 2,
///   E(m) = m (2m-1)! / ((2m+1) 2^(2m-2) (m!)^2) - 2m 2^(2m-2) ((m-1)!)^2 / (2m+1)!
PiConstant sf_e(unsigned m);

/// One of the four sequences behind a shared lazily-extended cache.
/// Index m houses the coefficient of x^(2m+1).
class CoeffSeq {
  public:
    explicit CoeffSeq(SeqId id) : id_(id) {}
    SeqId id() const { return id_; }
    PiConstant at(std::size_t m) const;

  private:
    SeqId id_;
};

/// A sequence split into its nonnegative part and its finitely many negative
/// terms: nonneg[i] + (negative term at i, if any) == original[i] exactly.
struct SplitSeries {
    std::vector<PiConstant> nonneg;
    std::vector<std::pair<std::size_t, PiConstant>> negative_terms;
};

/// C_k = c_k when c_k > 0, else 0; coefficients with negative sign are
/// collected (index, value) into negative_terms. Signs are decided exactly by
/// pi_sign, so PrecisionCapExceeded propagates for adversarial inputs.
SplitSeries split_nonneg(const std::vector<PiConstant>& coeffs);

}  // namespace polybounds
