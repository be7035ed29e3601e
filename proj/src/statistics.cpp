#include "tailcheck/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailcheck/distributions.hpp"

namespace tailcheck {

const char* to_string(StatKind kind) {
  switch (kind) {
    case StatKind::ks: return "ks";
    case StatKind::cvm: return "cvm";
    case StatKind::ad: return "ad";
  }
  return "?";
}

std::optional<StatKind> stat_kind_from_string(std::string_view name) {
  if (name == "ks") return StatKind::ks;
  if (name == "cvm") return StatKind::cvm;
  if (name == "ad") return StatKind::ad;
  return std::nullopt;
}

std::size_t GridSpec::size() const {
  if (!(delta > 0.0) || !(x_max >= delta)) {
    throw std::invalid_argument("GridSpec: need delta > 0 and x_max >= delta");
  }
  return static_cast<std::size_t>(std::llround(x_max / delta));
}

std::vector<double> GridSpec::points() const {
  const std::size_t count = size();
  std::vector<double> pts(count);
  for (std::size_t k = 0; k < count; ++k) {
    pts[k] = static_cast<double>(k + 1) * delta;
  }
  return pts;
}

TransformedProcess transformed_process(const TailSample& sample,
                                       const TransformCoefficients& coeffs) {
  const std::size_t m = sample.m();
  if (m == 0) {
    throw std::invalid_argument("transformed_process: empty tail sample");
  }
  const double theta = coeffs.basis.theta;
  const std::size_t count = coeffs.x_grid.size();

  // One pass over the sorted sample: prefix sums of ell(T_i) give the
  // indicator part for every grid point; the correction parts depend on the
  // sample only through two totals.
  std::vector<double> prefix_ell(m + 1, 0.0);
  double sum_corr2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = sample.t_values[i];
    prefix_ell[i + 1] = prefix_ell[i] + ell(theta, t);
    sum_corr2 += coeffs.basis.ell_beta_g_tilde(t) - beta_h(theta, t);
  }
  const double sum_ell_minus_one = prefix_ell[m] - static_cast<double>(m);
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

  TransformedProcess process;
  process.x_grid = coeffs.x_grid;
  process.values.resize(count);
  process.m = m;
  process.theta_hat = theta;

  for (std::size_t k = 0; k < count; ++k) {
    const double x = coeffs.x_grid[k];
    const auto upper = std::upper_bound(sample.t_values.begin(),
                                        sample.t_values.end(), x);
    const std::size_t below = static_cast<std::size_t>(upper - sample.t_values.begin());
    const double bcoef = coeffs.b[k] - coeffs.d1 * coeffs.a[k] * coeffs.cross;
    const double sum_phi = prefix_ell[below] -
                           coeffs.d1 * coeffs.a[k] * sum_ell_minus_one -
                           coeffs.d2 * bcoef * sum_corr2;
    const double expected = expected_phi_tilde(coeffs, k);
    process.values[k] =
        inv_sqrt_m * (sum_phi - static_cast<double>(m) * expected);
  }
  return process;
}

double ks_statistic(const TransformedProcess& process) {
  if (process.values.empty()) {
    throw std::invalid_argument("ks_statistic: empty grid");
  }
  double best = 0.0;
  for (double v : process.values) best = std::max(best, std::abs(v));
  return best;
}

double cvm_statistic(const TransformedProcess& process, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("cvm_statistic: delta must be > 0");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < process.values.size(); ++k) {
    const double v = process.values[k];
    sum += v * v * std::exp(-process.x_grid[k]);
  }
  return delta * sum;
}

double ad_statistic(const TransformedProcess& process, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("ad_statistic: delta must be > 0");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < process.values.size(); ++k) {
    const double v = process.values[k];
    sum += v * v / (-std::expm1(-process.x_grid[k]));
  }
  return delta * sum;
}

double monte_carlo_p_value(double value, std::span<const double> sorted_null_draws) {
  if (sorted_null_draws.empty()) {
    throw std::invalid_argument("monte_carlo_p_value: empty null table");
  }
  const auto first_ge = std::lower_bound(sorted_null_draws.begin(),
                                         sorted_null_draws.end(), value);
  const std::size_t n_ge =
      static_cast<std::size_t>(sorted_null_draws.end() - first_ge);
  return static_cast<double>(1 + n_ge) /
         static_cast<double>(1 + sorted_null_draws.size());
}

}  // namespace tailcheck
