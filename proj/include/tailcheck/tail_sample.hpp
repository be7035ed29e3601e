#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tailcheck {

inline constexpr std::size_t kDefaultMinTail = 40;

// A raw sample reduced to its threshold exceedances, T_i = X_i / x0 - 1 for
// each X_i strictly greater than x0. t_values is kept sorted ascending as the
// canonical form. Immutable by convention after make_tail_sample.
struct TailSample {
  double x0 = 0.0;
  std::size_t n = 0;             // raw observation count
  std::vector<double> t_values;  // sorted ascending, all > 0
  bool below_min_tail = false;   // m fell below the recommended minimum

  std::size_t m() const { return t_values.size(); }
};

// Throws NoExceedancesError when nothing lies above x0. Observations exactly
// equal to x0 are excluded: T = 0 contributes log(1) = 0 to the MLE
// denominator and carries no tail information. A tail smaller than `min_tail`
// is flagged on the result, not an error.
TailSample make_tail_sample(std::span<const double> raw, double x0,
                            std::size_t min_tail = kDefaultMinTail);

// Exponent MLE, m / sum_i log(T_i + 1). Coincides with the Hill estimator
// computed on the exceedances with the threshold as the anchor order
// statistic. No upper clamp: tiny denominators surface as large estimates.
// Throws DegenerateSampleError when the denominator is zero.
double fit_exponent_mle(const TailSample& sample);

}  // namespace tailcheck
