#include "tailcheck/score_basis.hpp"

#include <cmath>
#include <string>

#include "tailcheck/errors.hpp"

namespace tailcheck {

namespace {

void check_close(double value, double target, double tol, const char* what) {
  if (!(std::abs(value - target) < tol)) {
    throw BasisError(std::string("basis self-check failed: ") + what + " = " +
                     std::to_string(value) + ", expected " + std::to_string(target) +
                     " within " + std::to_string(tol));
  }
}

}  // namespace

ScoreBasis make_score_basis(double theta, const QuadratureEngine& engine) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("make_score_basis: theta must be a positive real");
  }

  ScoreBasis basis;
  basis.theta = theta;
  basis.quad_tolerance = engine.abs_tolerance;

  const auto one = [](double) { return 1.0; };
  const auto l = [theta](double t) { return ell(theta, t); };
  const auto bh = [theta](double t) { return beta_h(theta, t); };
  const auto lbg = [theta](double t) { return ell(theta, t) * beta_g(t); };

  basis.ip_one_ell = inner_product_h(one, l, theta, engine);
  basis.ip_one_ell_bg = inner_product_h(one, lbg, theta, engine);

  // <ell-1, ell bG> by direct quadrature, cross-checked against the
  // simplification <ell, ell bG> - <1, ell bG> = 0 - <1, ell bG>
  // (ell^2 h = g and int bG g = 0). The simplified value is kept.
  const double c_direct = inner_product_h(
      [theta](double t) { return ell(theta, t) - 1.0; }, lbg, theta, engine);
  basis.c_tilde = -basis.ip_one_ell_bg;
  if (!(std::abs(c_direct - basis.c_tilde) < 1e-9)) {
    throw BasisError("basis self-check failed: the two routes to <ell-1, ell bG> "
                     "disagree by " + std::to_string(c_direct - basis.c_tilde));
  }

  if (!(basis.ip_one_ell < 1.0)) {
    throw BasisError("basis self-check failed: <1, ell> = " +
                     std::to_string(basis.ip_one_ell) + " is not strictly below 1");
  }
  if (std::abs(1.0 - basis.ip_one_ell) < 1e-6) {
    throw BasisError("operator denominator near zero: 1 - <1, ell> = " +
                     std::to_string(1.0 - basis.ip_one_ell));
  }
  basis.adjust = basis.c_tilde / (1.0 - basis.ip_one_ell);

  const ScoreBasis& b = basis;  // adjusted function needs adjust fixed first
  basis.ip_bh_lbg_tilde = inner_product_h(
      bh, [&b](double t) { return b.ell_beta_g_tilde(t); }, theta, engine);
  if (std::abs(1.0 - basis.ip_bh_lbg_tilde) < 1e-6) {
    throw BasisError("operator denominator near zero: 1 - <beta_H, adjusted> = " +
                     std::to_string(1.0 - basis.ip_bh_lbg_tilde));
  }

  const double tol = 10.0 * engine.abs_tolerance;
  check_close(inner_product_h(bh, bh, theta, engine), 1.0, tol, "<beta_H, beta_H>");
  check_close(inner_product_h(one, bh, theta, engine), 0.0, tol, "<1, beta_H>");
  check_close(inner_product_h(l, l, theta, engine), 1.0, tol, "<ell, ell>");

  return basis;
}

}  // namespace tailcheck
