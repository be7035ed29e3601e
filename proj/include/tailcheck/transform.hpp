#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tailcheck/score_basis.hpp"

namespace tailcheck {

// The reflection K_{f,g}: u -> u - <g-f, u> / (1 - <f,g>) * (g - f), which
// exchanges the unit-norm functions f and g and fixes their orthogonal
// complement. Inner products are taken in L2(H_theta). Production evaluation
// goes through the expanded coefficients below; this operator form is for
// tests and debugging.
std::function<double(double)> apply_k_fg(std::function<double(double)> f,
                                         std::function<double(double)> g,
                                         std::function<double(double)> target,
                                         double theta,
                                         const QuadratureEngine& engine);

// Everything needed to evaluate the transformed indicator
//   phi~_x = K_hat(ell phi_x),   phi_x = 1{t <= x},
// and its expectation at each grid point without further integration:
// truncated inner products per x and the global operator scalars.
struct TransformCoefficients {
  ScoreBasis basis;
  std::vector<double> x_grid;  // ascending, positive

  // per grid point, integrals over [0, x] against dH:
  std::vector<double> a;    // <ell - 1,              ell phi_x>
  std::vector<double> b;    // <ell_beta_g_tilde - beta_H, ell phi_x>
  std::vector<double> e1;   // <1,                    ell phi_x>
  std::vector<double> eb;   // <beta_H,               ell phi_x>
  std::vector<double> elb;  // <ell_beta_g_tilde,     ell phi_x>

  // global scalars:
  double d1 = 0.0;            // 1 / (1 - <1, ell>)
  double d2 = 0.0;            // 1 / (1 - <beta_H, ell_beta_g_tilde>)
  double cross = 0.0;         // <ell_beta_g_tilde - beta_H, ell - 1>
  double ip_one_corr2 = 0.0;  // <1, ell_beta_g_tilde - beta_H>
};

// Builds the per-x caches by accumulating segment integrals over the
// ascending grid and validates, at every grid point, that the truncated
// squared norm <ell phi_x, ell phi_x> matches G(x) = 1 - e^-x within 1e-8.
// Quadrature failures carry the offending x in the message.
TransformCoefficients build_transform(const ScoreBasis& basis,
                                      std::span<const double> x_grid,
                                      const QuadratureEngine& engine);

// phi~_x(t) for x = x_grid[grid_index], from cached scalars only.
double phi_tilde(const TransformCoefficients& coeffs, std::size_t grid_index,
                 double t);

// E_theta phi~_x = <1, phi~_x>, from cached scalars only.
double expected_phi_tilde(const TransformCoefficients& coeffs,
                          std::size_t grid_index);

// Debug oracle: the same expectation by fresh quadrature of phi~_x * h.
double expected_phi_tilde_by_quadrature(const TransformCoefficients& coeffs,
                                        std::size_t grid_index,
                                        const QuadratureEngine& engine);

}  // namespace tailcheck
