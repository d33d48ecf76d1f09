#pragma once

#include "polybounds/rational.hpp"

namespace polybounds {

/// Bernoulli number B_n in the convention B_1 = -1/2, exact. Computed from
/// the defining recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0 with a memo table
/// that is safe for concurrent callers. Total for all n >= 0.
BigRational bernoulli(unsigned n);

}  // namespace polybounds
