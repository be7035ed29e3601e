#pragma once

#include <cmath>

#include "tailcheck/distributions.hpp"
#include "tailcheck/quadrature.hpp"

namespace tailcheck {

// sqrt(dG/dH)(t) = theta^-1/2 (1+t)^((theta+1)/2) e^(-t/2), evaluated in log
// space so large t or theta cannot overflow an intermediate power.
inline double ell(double theta, double t) {
  return std::exp(-0.5 * std::log(theta) + 0.5 * (theta + 1.0) * std::log1p(t) -
                  0.5 * t);
}

// Normalized score of the null family: 1 - theta log(1+t).
inline double beta_h(double theta, double t) { return 1.0 - theta * std::log1p(t); }

// Normalized score of the exponential reference: 1 - t.
inline double beta_g(double t) { return 1.0 - t; }

// <f, g>_H = integral of f g dH_theta over [0, inf).
template <class F, class G>
double inner_product_h(const F& f, const G& g, double theta,
                       const QuadratureEngine& engine) {
  const ParetoTailModel model(theta);
  return engine.integrate(
      [&](double t) { return f(t) * g(t) * model.pdf(t); }, 0.0, kInf);
}

// The theta-dependent scalars of the subspace spanned by
// {1, beta_H, ell, ell*beta_G}, plus the adjusted function
//   ell_beta_g_tilde = ell*beta_G - adjust * (ell - 1),
// the image of ell*beta_G under the reflection exchanging 1 and ell.
// Immutable after make_score_basis; all evaluation members are pure.
struct ScoreBasis {
  double theta = 1.0;
  double quad_tolerance = 1e-10;
  double ip_one_ell = 0.0;       // <1, ell>
  double ip_one_ell_bg = 0.0;    // <1, ell beta_G>
  double c_tilde = 0.0;          // <ell - 1, ell beta_G>
  double adjust = 0.0;           // c_tilde / (1 - ip_one_ell)
  double ip_bh_lbg_tilde = 0.0;  // <beta_H, ell_beta_g_tilde>

  double ell_beta_g_tilde(double t) const {
    const double l = ell(theta, t);
    return l * beta_g(t) - adjust * (l - 1.0);
  }
};

// Computes and validates the cached scalars. Throws BasisError when a
// self-check fails (unit norms, orthogonality, strict ip_one_ell < 1) or an
// operator denominator 1 - <.,.> falls below 1e-6 in magnitude; propagates
// QuadratureError from the engine.
ScoreBasis make_score_basis(double theta, const QuadratureEngine& engine);

}  // namespace tailcheck
