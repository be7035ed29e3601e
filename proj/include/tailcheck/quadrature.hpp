#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tailcheck/errors.hpp"

namespace tailcheck {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace detail {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 tables). Nodes are the
// non-negative abscissae; the embedded 7-point Gauss rule sits at the
// odd-indexed nodes plus the centre.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15KronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGk15GaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value = 0.0;
  double error = 0.0;
};

// One Gauss-Kronrod panel on [a,b] with the QUADPACK error rescaling.
// Throws QuadratureError on non-finite integrand values.
template <class F>
PanelEstimate gk15_panel(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double resk = kGk15KronrodW[7] * fc;
  double resg = kGk15GaussW[3] * fc;
  double resabs = kGk15KronrodW[7] * std::abs(fc);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGk15Nodes[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kGk15KronrodW[j] * sum;
    resabs += kGk15KronrodW[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kGk15GaussW[(j - 1) / 2] * sum;
  }
  if (!std::isfinite(resk)) {
    throw QuadratureError("non-finite integrand value inside a quadrature panel");
  }

  const double mean = resk * 0.5;
  double resasc = kGk15KronrodW[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kGk15KronrodW[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  PanelEstimate out;
  out.value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  out.error = err;
  return out;
}

struct Interval {
  double lo, hi;
  PanelEstimate est;
};

// Globally adaptive driver: repeatedly bisect the worst interval until the
// summed error estimate meets abs_tolerance.
template <class F>
double adapt_global(const F& f, std::vector<Interval>& work, double abs_tolerance,
                    int max_subdivisions) {
  auto total_error = [&]() {
    double e = 0.0;
    for (const auto& iv : work) e += iv.est.error;
    return e;
  };
  while (total_error() > abs_tolerance) {
    if (static_cast<int>(work.size()) >= max_subdivisions) {
      throw QuadratureError("quadrature non-convergence: error estimate " +
                            std::to_string(total_error()) + " above tolerance " +
                            std::to_string(abs_tolerance) + " after " +
                            std::to_string(work.size()) + " subdivisions");
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      if (work[i].est.error > work[worst].est.error) worst = i;
    }
    const Interval iv = work[worst];
    const double mid = 0.5 * (iv.lo + iv.hi);
    if (!(mid > iv.lo && mid < iv.hi)) {
      throw QuadratureError("quadrature non-convergence: interval vanished before "
                            "reaching the requested tolerance");
    }
    work[worst] = Interval{iv.lo, mid, gk15_panel(f, iv.lo, mid)};
    work.push_back(Interval{mid, iv.hi, gk15_panel(f, mid, iv.hi)});
  }
  // Canonical left-to-right summation, independent of subdivision history.
  std::sort(work.begin(), work.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double result = 0.0;
  for (const auto& iv : work) result += iv.est.value;
  return result;
}

}  // namespace detail

// Adaptive quadrature on [0, inf) after the change of variables u = 1/(1+t),
// which maps the domain to (0,1] and makes error control uniform in theta.
// Integral estimates either meet abs_tolerance or raise QuadratureError;
// there is no silent degraded result. Declared discontinuity locations
// (in t-space) are honoured as hard subdivision points so no panel straddles
// a jump.
struct QuadratureEngine {
  double abs_tolerance = 1e-10;
  int max_subdivisions = 2000;
  std::vector<double> split_points;  // t-space discontinuities to respect

  // Integral of f over [lo, hi] in t-space; hi may be kInf.
  template <class F>
  double integrate(const F& f, double lo, double hi) const {
    if (!(lo >= 0.0) || std::isnan(hi) || hi < lo) {
      throw std::invalid_argument("QuadratureEngine: bad integration bounds");
    }
    if (hi == lo) return 0.0;

    // u = 1/(1+t): t-space [lo, hi] becomes u-space [u_min, u_max], reversed.
    const double u_max = 1.0 / (1.0 + lo);
    const double u_min = (hi == kInf) ? 0.0 : 1.0 / (1.0 + hi);
    auto g = [&f](double u) {
      const double t = (1.0 - u) / u;
      return f(t) / (u * u);
    };

    std::vector<double> edges{u_min, u_max};
    for (double s : split_points) {
      if (s > lo && s < hi && std::isfinite(s)) edges.push_back(1.0 / (1.0 + s));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<detail::Interval> work;
    work.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      work.push_back(detail::Interval{edges[i], edges[i + 1],
                                      detail::gk15_panel(g, edges[i], edges[i + 1])});
    }
    return detail::adapt_global(g, work, abs_tolerance, max_subdivisions);
  }
};

}  // namespace tailcheck
