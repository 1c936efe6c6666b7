#ifndef GGBOUND_QUADRATURE_HPP
#define GGBOUND_QUADRATURE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggbound/errors.hpp"

namespace ggbound {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK dqk15 nodes).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double value = 0.0;   // Kronrod estimate
  double err = 0.0;     // |Kronrod - Gauss|
  double resabs = 0.0;  // Kronrod estimate of the integral of |g|
};

template <class F>
PanelResult gk15(F& g, double lo, double hi, std::int64_t& evaluations) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  auto eval = [&](double x) {
    const double v = g(x);
    ++evaluations;
    if (!std::isfinite(v))
      throw evaluation_error("quadrature: non-finite integrand value", x);
    return v;
  };

  const double fc = eval(center);
  double resk = kKronrodWeights[7] * fc;
  double resg = kGaussWeights[3] * fc;
  double resabs = kKronrodWeights[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = eval(center - dx);
    const double f2 = eval(center + dx);
    resk += kKronrodWeights[j] * (f1 + f2);
    resabs += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kGaussWeights[(j - 1) / 2] * (f1 + f2);
  }
  return {resk * half, std::abs(resk - resg) * half, resabs * half};
}

}  // namespace detail

// Deterministic adaptive bisection built on the embedded 7/15 rule pair.
// The estimate satisfies |value - true integral| <= max(tol, err_estimate)
// for smooth integrands; tol is absolute.
template <class F>
QuadResult integrate(F&& g, double lo, double hi, double tol = 1e-10) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw std::invalid_argument("integrate: requires finite lo < hi");
  if (!(tol >= 1e-14))
    throw std::invalid_argument("integrate: tol must be >= 1e-14");

  struct Panel {
    double lo, hi;
    detail::PanelResult r;
    int depth;
  };
  constexpr int kMaxDepth = 60;
  const double total_len = hi - lo;
  const double eps = std::numeric_limits<double>::epsilon();

  std::int64_t evaluations = 0;
  std::vector<Panel> work;
  work.push_back({lo, hi, detail::gk15(g, lo, hi, evaluations), 0});

  double value = 0.0;
  double err = 0.0;
  while (!work.empty()) {
    const Panel p = work.back();
    work.pop_back();
    const double share = tol * ((p.hi - p.lo) / total_len);
    const double floor = 50.0 * eps * p.r.resabs;
    if (p.r.err <= share || p.r.err <= floor) {
      value += p.r.value;
      err += p.r.err;
      continue;
    }
    if (p.depth >= kMaxDepth) {
      double best = value + p.r.value;
      double best_err = err + p.r.err;
      for (const Panel& rest : work) {
        best += rest.r.value;
        best_err += rest.r.err;
      }
      throw convergence_error(
          "integrate: subdivision limit reached near [" + std::to_string(p.lo) +
              ", " + std::to_string(p.hi) + "]",
          best, best_err);
    }
    const double mid = 0.5 * (p.lo + p.hi);
    // Push right before left so panels are accepted in left-to-right order.
    work.push_back({mid, p.hi, detail::gk15(g, mid, p.hi, evaluations), p.depth + 1});
    work.push_back({p.lo, mid, detail::gk15(g, p.lo, mid, evaluations), p.depth + 1});
  }

  if (!(err <= tol))
    throw convergence_error("integrate: roundoff floor exceeds requested tolerance",
                            value, err);
  return {value, err, evaluations};
}

}  // namespace ggbound

#endif
