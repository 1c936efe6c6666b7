#ifndef GGBOUND_HYPOTHESIS_HPP
#define GGBOUND_HYPOTHESIS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ggbound/errors.hpp"
#include "ggbound/function_catalog.hpp"

namespace ggbound {

enum class DerivOrder { first, second };
enum class CheckKind { geometric_convexity, monotone_decrease, combined };

// Sample triple achieving the worst violation; t is NaN for monotonicity
// witnesses, where only the pair (x, y) matters.
struct CheckWitness {
  double x = 0.0;
  double y = 0.0;
  double t = std::numeric_limits<double>::quiet_NaN();
};

struct CheckReport {
  bool passed = true;
  double worst_violation = -std::numeric_limits<double>::infinity();
  double tolerance = 0.0;  // passed <=> worst_violation <= tolerance
  CheckWitness witness;
  std::size_t samples_used = 0;
  std::size_t zero_samples = 0;  // pairs skipped because g was not positive
  CheckKind kind = CheckKind::combined;
};

namespace detail {

inline constexpr double kTGrid[9] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

inline double checked_eval(const std::function<double(double)>& g, double x) {
  const double v = g(x);
  if (!std::isfinite(v))
    throw evaluation_error("hypothesis check: non-finite function value", x);
  return v;
}

}  // namespace detail

// Sampled test of g(x^t y^(1-t)) <= g(x)^t g(y)^(1-t) over a geometric grid
// and a fixed t grid. Certifies only the sampled points. Pairs where g is
// not strictly positive are skipped and counted, not failed.
inline CheckReport check_geometric_convexity(const std::function<double(double)>& g,
                                             double lo, double hi,
                                             std::size_t grid_n = 33) {
  if (!(0.0 < lo && lo < hi))
    throw std::invalid_argument("check_geometric_convexity: requires 0 < lo < hi");
  if (grid_n < 5)
    throw std::invalid_argument("check_geometric_convexity: grid_n must be >= 5");

  std::vector<double> xs(grid_n), gs(grid_n);
  const double step = std::log(hi / lo) / static_cast<double>(grid_n - 1);
  double scale = 0.0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    xs[i] = (i == grid_n - 1) ? hi : lo * std::exp(static_cast<double>(i) * step);
    gs[i] = detail::checked_eval(g, xs[i]);
    scale = std::max(scale, std::abs(gs[i]));
  }

  CheckReport report;
  report.kind = CheckKind::geometric_convexity;
  report.samples_used = grid_n;
  for (std::size_t i = 0; i < grid_n; ++i) {
    for (std::size_t j = i + 1; j < grid_n; ++j) {
      if (!(gs[i] > 0.0) || !(gs[j] > 0.0)) {
        ++report.zero_samples;
        continue;
      }
      for (double t : detail::kTGrid) {
        const double mid = std::pow(xs[i], t) * std::pow(xs[j], 1.0 - t);
        const double gm = detail::checked_eval(g, mid);
        ++report.samples_used;
        scale = std::max(scale, std::abs(gm));
        const double violation = gm - std::pow(gs[i], t) * std::pow(gs[j], 1.0 - t);
        if (violation > report.worst_violation) {
          report.worst_violation = violation;
          report.witness = {xs[i], xs[j], t};
        }
      }
    }
  }
  report.tolerance = 1e-12 * std::max(1.0, scale);
  report.passed = !(report.worst_violation > report.tolerance);
  return report;
}

// Non-strict monotone decrease over all ordered pairs of a uniform grid.
inline CheckReport check_monotone_decreasing(const std::function<double(double)>& g,
                                             double lo, double hi,
                                             std::size_t grid_n = 33) {
  if (!(lo < hi))
    throw std::invalid_argument("check_monotone_decreasing: requires lo < hi");
  if (grid_n < 5)
    throw std::invalid_argument("check_monotone_decreasing: grid_n must be >= 5");

  std::vector<double> xs(grid_n), gs(grid_n);
  const double step = (hi - lo) / static_cast<double>(grid_n - 1);
  double scale = 0.0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    xs[i] = (i == grid_n - 1) ? hi : lo + static_cast<double>(i) * step;
    gs[i] = detail::checked_eval(g, xs[i]);
    scale = std::max(scale, std::abs(gs[i]));
  }

  CheckReport report;
  report.kind = CheckKind::monotone_decrease;
  report.samples_used = grid_n;
  for (std::size_t i = 0; i < grid_n; ++i) {
    for (std::size_t j = i + 1; j < grid_n; ++j) {
      const double violation = gs[j] - gs[i];
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.witness = {xs[i], xs[j],
                          std::numeric_limits<double>::quiet_NaN()};
      }
    }
  }
  report.tolerance = 1e-12 * std::max(1.0, scale);
  report.passed = !(report.worst_violation > report.tolerance);
  return report;
}

// Both checks applied to x -> |f^(order)(x)|^q; fails if either fails.
inline CheckReport check_hypotheses(const FunctionTriple& triple, double lo,
                                    double hi, double q, DerivOrder order,
                                    std::size_t grid_n = 33) {
  if (!(q > 0.0)) throw std::invalid_argument("check_hypotheses: requires q > 0");
  const auto& deriv = (order == DerivOrder::first) ? triple.f1 : triple.f2;
  std::function<double(double)> g = [&deriv, q](double x) {
    return std::pow(std::abs(deriv(x)), q);
  };

  const CheckReport convexity = check_geometric_convexity(g, lo, hi, grid_n);
  const CheckReport decrease = check_monotone_decreasing(g, lo, hi, grid_n);

  CheckReport report;
  if (convexity.passed != decrease.passed)
    report = convexity.passed ? decrease : convexity;
  else
    report = (convexity.worst_violation >= decrease.worst_violation) ? convexity
                                                                     : decrease;
  report.kind = CheckKind::combined;
  report.passed = convexity.passed && decrease.passed;
  report.samples_used = convexity.samples_used + decrease.samples_used;
  report.zero_samples = convexity.zero_samples + decrease.zero_samples;
  return report;
}

}  // namespace ggbound

#endif
