#include "tailcheck/transform.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tailcheck/distributions.hpp"
#include "tailcheck/errors.hpp"

namespace tailcheck {

std::function<double(double)> apply_k_fg(std::function<double(double)> f,
                                         std::function<double(double)> g,
                                         std::function<double(double)> target,
                                         double theta,
                                         const QuadratureEngine& engine) {
  const double fg = inner_product_h(f, g, theta, engine);
  if (std::abs(1.0 - fg) < 1e-6) {
    throw BasisError("operator denominator near zero: 1 - <f, g> = " +
                     std::to_string(1.0 - fg));
  }
  const double coef =
      inner_product_h([&](double t) { return g(t) - f(t); }, target, theta, engine) /
      (1.0 - fg);
  return [f = std::move(f), g = std::move(g), target = std::move(target),
          coef](double t) { return target(t) - coef * (g(t) - f(t)); };
}

TransformCoefficients build_transform(const ScoreBasis& basis,
                                      std::span<const double> x_grid,
                                      const QuadratureEngine& engine) {
  if (x_grid.empty()) {
    throw std::invalid_argument("build_transform: empty x grid");
  }
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const bool ascending = i == 0 || x_grid[i] > x_grid[i - 1];
    if (!(x_grid[i] > 0.0) || !ascending) {
      throw std::invalid_argument("build_transform: x grid must be positive and ascending");
    }
  }

  const double theta = basis.theta;
  const ParetoTailModel model(theta);

  TransformCoefficients coeffs;
  coeffs.basis = basis;
  coeffs.x_grid.assign(x_grid.begin(), x_grid.end());
  coeffs.d1 = 1.0 / (1.0 - basis.ip_one_ell);
  coeffs.d2 = 1.0 / (1.0 - basis.ip_bh_lbg_tilde);
  coeffs.cross = inner_product_h(
      [&basis, theta](double t) { return basis.ell_beta_g_tilde(t) - beta_h(theta, t); },
      [theta](double t) { return ell(theta, t) - 1.0; }, theta, engine);
  coeffs.ip_one_corr2 = inner_product_h(
      [](double) { return 1.0; },
      [&basis, theta](double t) { return basis.ell_beta_g_tilde(t) - beta_h(theta, t); },
      theta, engine);

  const std::size_t count = x_grid.size();
  coeffs.a.resize(count);
  coeffs.b.resize(count);
  coeffs.e1.resize(count);
  coeffs.eb.resize(count);
  coeffs.elb.resize(count);

  // Segment-wise accumulation over the ascending grid: one short smooth
  // integral per cell instead of a fresh [0, x] pass per grid point. The
  // per-segment tolerance is scaled so the accumulated error still meets the
  // engine tolerance at every grid point.
  QuadratureEngine segment = engine;
  segment.abs_tolerance = engine.abs_tolerance / static_cast<double>(count);
  segment.split_points.clear();

  double acc_e1 = 0.0, acc_eb = 0.0, acc_lbg = 0.0, acc_norm = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double x = x_grid[k];
    try {
      acc_e1 += segment.integrate(
          [&](double t) { return ell(theta, t) * model.pdf(t); }, prev, x);
      acc_eb += segment.integrate(
          [&](double t) { return beta_h(theta, t) * ell(theta, t) * model.pdf(t); },
          prev, x);
      acc_lbg += segment.integrate(
          [&](double t) {
            const double l = ell(theta, t);
            return beta_g(t) * l * l * model.pdf(t);
          },
          prev, x);
      acc_norm += segment.integrate(
          [&](double t) {
            const double l = ell(theta, t);
            return l * l * model.pdf(t);
          },
          prev, x);
    } catch (const QuadratureError& err) {
      throw QuadratureError("while building transform coefficients at x = " +
                            std::to_string(x) + ": " + err.what());
    }

    const double g_of_x = exponential_cdf(x);
    if (!(std::abs(acc_norm - g_of_x) < 1e-8)) {
      throw QuadratureError("transform coefficient norm check failed at x = " +
                            std::to_string(x) + ": <ell phi_x, ell phi_x> = " +
                            std::to_string(acc_norm) + " vs G(x) = " +
                            std::to_string(g_of_x));
    }

    coeffs.e1[k] = acc_e1;
    coeffs.eb[k] = acc_eb;
    coeffs.a[k] = acc_norm - acc_e1;  // <ell-1, ell phi_x> = <ell,.> - <1,.>
    coeffs.elb[k] = acc_lbg - basis.adjust * coeffs.a[k];
    coeffs.b[k] = coeffs.elb[k] - acc_eb;
    prev = x;
  }
  return coeffs;
}

double phi_tilde(const TransformCoefficients& coeffs, std::size_t grid_index,
                 double t) {
  const double theta = coeffs.basis.theta;
  const double x = coeffs.x_grid[grid_index];
  const double l = ell(theta, t);
  const double corr2 = coeffs.basis.ell_beta_g_tilde(t) - beta_h(theta, t);
  const double ax = coeffs.a[grid_index];
  const double bx = coeffs.b[grid_index];
  const double indicator = (t <= x) ? l : 0.0;
  return indicator - coeffs.d1 * ax * (l - 1.0) -
         coeffs.d2 * (bx - coeffs.d1 * ax * coeffs.cross) * corr2;
}

double expected_phi_tilde(const TransformCoefficients& coeffs,
                          std::size_t grid_index) {
  const double ax = coeffs.a[grid_index];
  const double bx = coeffs.b[grid_index];
  return coeffs.e1[grid_index] -
         coeffs.d1 * ax * (coeffs.basis.ip_one_ell - 1.0) -
         coeffs.d2 * (bx - coeffs.d1 * ax * coeffs.cross) * coeffs.ip_one_corr2;
}

double expected_phi_tilde_by_quadrature(const TransformCoefficients& coeffs,
                                        std::size_t grid_index,
                                        const QuadratureEngine& engine) {
  const ParetoTailModel model(coeffs.basis.theta);
  QuadratureEngine split = engine;
  split.split_points.push_back(coeffs.x_grid[grid_index]);
  return split.integrate(
      [&](double t) { return phi_tilde(coeffs, grid_index, t) * model.pdf(t); }, 0.0,
      kInf);
}

}  // namespace tailcheck
