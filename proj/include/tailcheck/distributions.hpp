#pragma once

#include <cmath>
#include <stdexcept>

namespace tailcheck {

// The one-parameter null family of tail laws on [0, inf):
//   cdf(t) = 1 - (1+t)^-theta,  pdf(t) = theta (1+t)^-(theta+1).
// Immutable after construction; all members are pure.
struct ParetoTailModel {
  double theta;

  explicit ParetoTailModel(double theta_in) : theta(theta_in) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
      throw std::invalid_argument("ParetoTailModel: theta must be a positive real");
    }
  }

  double cdf(double t) const { return -std::expm1(-theta * std::log1p(t)); }

  double pdf(double t) const {
    return std::exp(std::log(theta) - (theta + 1.0) * std::log1p(t));
  }

  // Inverse of cdf on [0,1); quantile(cdf(t)) == t.
  double quantile(double p) const { return std::expm1(-std::log1p(-p) / theta); }
};

// Fisher information of the family at `theta`: 1/theta^2.
inline double fisher_information_h(double theta) {
  if (!(theta > 0.0)) {
    throw std::invalid_argument("fisher_information_h: theta must be > 0");
  }
  return 1.0 / (theta * theta);
}

// Fixed standard-exponential reference law G(t) = 1 - e^-t.
inline double exponential_cdf(double t) { return -std::expm1(-t); }
inline double exponential_pdf(double t) { return std::exp(-t); }
inline constexpr double kExponentialFisherInformation = 1.0;

}  // namespace tailcheck
