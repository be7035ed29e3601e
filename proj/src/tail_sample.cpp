#include "tailcheck/tail_sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailcheck/errors.hpp"

namespace tailcheck {

TailSample make_tail_sample(std::span<const double> raw, double x0,
                            std::size_t min_tail) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw std::invalid_argument("make_tail_sample: x0 must be a positive real");
  }
  if (raw.empty()) {
    throw std::invalid_argument("make_tail_sample: raw sample is empty");
  }

  TailSample sample;
  sample.x0 = x0;
  sample.n = raw.size();
  sample.t_values.reserve(raw.size() / 8);
  for (double x : raw) {
    // Strict exceedance; values equal to x0 carry no tail information.
    if (x > x0) sample.t_values.push_back(x / x0 - 1.0);
  }
  if (sample.t_values.empty()) {
    throw NoExceedancesError("no exceedances above x0; consider lowering the threshold");
  }
  std::sort(sample.t_values.begin(), sample.t_values.end());
  sample.below_min_tail = sample.t_values.size() < min_tail;
  return sample;
}

double fit_exponent_mle(const TailSample& sample) {
  if (sample.m() == 0) {
    throw std::invalid_argument("fit_exponent_mle: empty tail sample");
  }
  double denom = 0.0;
  for (double t : sample.t_values) denom += std::log1p(t);
  if (denom <= 0.0) {
    throw DegenerateSampleError("degenerate sample at threshold: all exceedances "
                                "coincide with x0");
  }
  return static_cast<double>(sample.m()) / denom;
}

}  // namespace tailcheck
