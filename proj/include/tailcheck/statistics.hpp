#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tailcheck/tail_sample.hpp"
#include "tailcheck/transform.hpp"

namespace tailcheck {

enum class StatKind { ks, cvm, ad };

const char* to_string(StatKind kind);
std::optional<StatKind> stat_kind_from_string(std::string_view name);

// Uniform evaluation grid {delta, 2 delta, ..., x_max}. The defaults match
// the discretisation used for the test statistics: step 0.1 up to 8, where
// G(8) = 0.9997 is close enough to 1.
struct GridSpec {
  double delta = 0.1;
  double x_max = 8.0;

  std::size_t size() const;
  std::vector<double> points() const;
  bool operator==(const GridSpec&) const = default;
};

// The transformed tail empirical process evaluated on the x-grid:
//   v(x) = m^-1/2 sum_i [phi~_x(T_i) - E phi~_x].
struct TransformedProcess {
  std::vector<double> x_grid;
  std::vector<double> values;
  std::size_t m = 0;
  double theta_hat = 0.0;
};

// Requires coeffs built at the exponent fitted from this sample. Per-x sums
// run left-to-right over the sorted sample for bit-reproducibility.
TransformedProcess transformed_process(const TailSample& sample,
                                       const TransformCoefficients& coeffs);

// max over grid points of |v(x)|.
double ks_statistic(const TransformedProcess& process);

// delta * sum_x v(x)^2 e^-x  — the Cramer-von Mises form, integrating v^2
// against dG on the uniform grid.
double cvm_statistic(const TransformedProcess& process, double delta);

// delta * sum_x v(x)^2 / (1 - e^-x) — the Anderson-Darling weight, using
// dG / (G (1-G)) = dx / (1 - e^-x). The grid excludes x = 0 so the weight is
// finite everywhere.
double ad_statistic(const TransformedProcess& process, double delta);

// Add-one Monte Carlo p-value: (1 + #{draws >= value}) / (1 + B). Never
// returns 0; returns 1 when every draw is at least `value`.
double monte_carlo_p_value(double value, std::span<const double> sorted_null_draws);

// One hypothesis-test outcome plus the context needed to reproduce it.
struct StatisticReport {
  double ks = 0.0;
  double cvm = 0.0;
  double ad = 0.0;
  std::optional<double> p_ks, p_cvm, p_ad;
  double x0 = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  double theta_hat = 0.0;
  GridSpec grid;
  bool below_min_tail = false;
  std::string table_provenance;  // table file digest or "seed:<s>,reps:<r>"
};

}  // namespace tailcheck
