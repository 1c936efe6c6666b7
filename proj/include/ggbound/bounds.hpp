#ifndef GGBOUND_BOUNDS_HPP
#define GGBOUND_BOUNDS_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "ggbound/function_catalog.hpp"
#include "ggbound/hypothesis.hpp"
#include "ggbound/identities.hpp"
#include "ggbound/quadrature.hpp"
#include "ggbound/scalar_kernels.hpp"

namespace ggbound {

enum class Theorem { t1, t2, t3, t4, t5, c1, c3 };
enum class BoundVariant { standard, paper_literal };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1: return "T1";
    case Theorem::t2: return "T2";
    case Theorem::t3: return "T3";
    case Theorem::t4: return "T4";
    case Theorem::t5: return "T5";
    case Theorem::c1: return "C1";
    case Theorem::c3: return "C3";
  }
  return "?";
}

struct BoundFlags {
  bool degenerate_k = false;    // a kernel/mean argument hit its zero limit
  bool x_at_endpoint = false;   // one weight vanished (x = a or x = b)
  bool zero_derivative = false; // a sampled derivative magnitude was zero
  bool negative_kernel = false; // literal-variant kernel left its real domain

  bool any() const {
    return degenerate_k || x_at_endpoint || zero_derivative || negative_kernel;
  }

  std::string to_string() const {
    std::string out;
    auto add = [&out](bool on, const char* name) {
      if (!on) return;
      if (!out.empty()) out.push_back(';');
      out += name;
    };
    add(degenerate_k, "degenerate_k");
    add(x_at_endpoint, "x_at_endpoint");
    add(zero_derivative, "zero_derivative");
    add(negative_kernel, "negative_kernel");
    return out;
  }
};

struct BoundReport {
  Theorem theorem = Theorem::t2;
  BoundVariant variant = BoundVariant::standard;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double ratio = 0.0;  // lhs / rhs; 0 when both vanish, +inf when only rhs does
  CheckReport hyp;
  BoundFlags flags;
};

// |  mean(f) - f(x) + (x - (a+b)/2) f'(x) |, the midpoint-type deviation.
inline double midpoint_lhs(const FunctionTriple& triple, const EvalConfig& cfg,
                           double tol = 1e-10) {
  validate_identity_config(cfg);
  const double mean = integrate(triple.f, cfg.a, cfg.b, tol).value / (cfg.b - cfg.a);
  return std::abs(mean - triple.f(cfg.x) +
                  (cfg.x - 0.5 * (cfg.a + cfg.b)) * triple.f1(cfg.x));
}

// | ((b-x) f(b) + (x-a) f(a))/(b-a) - mean(f) |, the weighted-trapezoid
// deviation.
inline double trapezoid_lhs(const FunctionTriple& triple, const EvalConfig& cfg,
                            double tol = 1e-10) {
  validate_identity_config(cfg);
  const double mean = integrate(triple.f, cfg.a, cfg.b, tol).value / (cfg.b - cfg.a);
  return std::abs(((cfg.b - cfg.x) * triple.f(cfg.b) +
                   (cfg.x - cfg.a) * triple.f(cfg.a)) /
                      (cfg.b - cfg.a) -
                  mean);
}

namespace detail {

// | f(x) - mean(f) |, the plain point deviation.
inline double point_lhs(const FunctionTriple& triple, const EvalConfig& cfg,
                        double tol) {
  const double mean = integrate(triple.f, cfg.a, cfg.b, tol).value / (cfg.b - cfg.a);
  return std::abs(triple.f(cfg.x) - mean);
}

// Derivative magnitudes below 1e-300 are exact zeros for ratio purposes.
inline double deriv_magnitude(double v, BoundFlags& flags) {
  const double m = std::abs(v);
  if (m < 1e-300) {
    flags.zero_derivative = true;
    return 0.0;
  }
  return m;
}

// weight * L(dx^q, de^q)^(1/q); zero magnitudes collapse to the limit 0.
inline double logmean_term(double weight, double dx, double de, double q,
                           BoundFlags& flags) {
  if (weight == 0.0) return 0.0;
  if (dx == 0.0 || de == 0.0) {
    flags.degenerate_k = true;
    return 0.0;
  }
  return weight *
         std::pow(log_mean(std::pow(dx, q), std::pow(de, q)), 1.0 / q);
}

// weight * de * kernel((dx/de)^q)^(1/q) for the power-mean route. Both a
// vanishing numerator (k = 0) and a vanishing endpoint magnitude send the
// term to its integral limit, 0.
template <class Kernel>
double kernel_term(double weight, double dx, double de, double q,
                   Kernel&& kernel, BoundFlags& flags) {
  if (weight == 0.0) return 0.0;
  if (dx == 0.0 || de == 0.0) {
    flags.degenerate_k = true;
    return 0.0;
  }
  const double k = std::pow(dx / de, q);
  return weight * de * std::pow(kernel(k), 1.0 / q);
}

// The t^2-weighted kernel exactly as printed (last term 2k, no endpoint
// derivative multiplier). Negative for k < 1 and divergent at k = 1; kept
// only to demonstrate how the printed form differs from its integral.
inline double literal_kernel_k3(double k) {
  const double l = std::log(k);
  return k / l - 2.0 * k / (l * l) + 2.0 * k / (l * l * l);
}

// Sign-preserving real q-th root; makes the literal variant evaluable where
// its kernel is negative, which even integer q would otherwise send to NaN.
inline double signed_root(double v, double inv_q) {
  if (v == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(v), inv_q), v);
}

inline double literal_term_t3(double weight, double dx, double de, double q,
                              BoundFlags& flags) {
  if (weight == 0.0) return 0.0;
  if (dx == 0.0 || de == 0.0) {
    flags.degenerate_k = true;
    return 0.0;
  }
  const double k = std::pow(dx / de, q);
  const double v = literal_kernel_k3(k);
  if (!std::isfinite(v)) {
    flags.degenerate_k = true;
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (v < 0.0) flags.negative_kernel = true;
  return weight * signed_root(v, 1.0 / q);
}

inline BoundReport assemble(Theorem theorem, BoundVariant variant, double lhs,
                            double rhs, CheckReport hyp, BoundFlags flags) {
  BoundReport report;
  report.theorem = theorem;
  report.variant = variant;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = rhs - lhs;
  if (rhs == 0.0)
    report.ratio = (lhs == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  else
    report.ratio = lhs / rhs;
  report.hyp = hyp;
  report.flags = flags;
  return report;
}

inline const HolderPair& require_exps(const EvalConfig& cfg) {
  if (!cfg.exps) throw std::invalid_argument("bound: exponent pair required");
  return *cfg.exps;
}

inline const HolderPair& require_holder(const EvalConfig& cfg) {
  const HolderPair& exps = require_exps(cfg);
  if (!exps.has_p())
    throw std::invalid_argument("bound: this theorem requires a Hoelder pair (p given)");
  return exps;
}

// Shared right-hand side of the first-derivative log-mean bounds.
inline double first_order_logmean_rhs(const FunctionTriple& triple,
                                      const EvalConfig& cfg,
                                      const HolderPair& exps,
                                      BoundFlags& flags) {
  const double q = exps.q();
  const double dx = deriv_magnitude(triple.f1(cfg.x), flags);
  const double da = deriv_magnitude(triple.f1(cfg.a), flags);
  const double db = deriv_magnitude(triple.f1(cfg.b), flags);
  const double wa = (cfg.x - cfg.a) * (cfg.x - cfg.a) / (cfg.b - cfg.a);
  const double wb = (cfg.b - cfg.x) * (cfg.b - cfg.x) / (cfg.b - cfg.a);
  if (wa == 0.0 || wb == 0.0) flags.x_at_endpoint = true;
  return prefactor(PrefactorKind::holder_t1t4, exps) *
         (logmean_term(wa, dx, da, q, flags) + logmean_term(wb, dx, db, q, flags));
}

}  // namespace detail

// Midpoint deviation against the Hoelder/log-mean bound on |f''|^q.
inline BoundReport bound_thm2(const FunctionTriple& triple, const EvalConfig& cfg,
                              double tol = 1e-10) {
  validate_bound_config(cfg);
  const HolderPair& exps = detail::require_holder(cfg);
  const double q = exps.q();

  BoundFlags flags;
  const double dx = detail::deriv_magnitude(triple.f2(cfg.x), flags);
  const double da = detail::deriv_magnitude(triple.f2(cfg.a), flags);
  const double db = detail::deriv_magnitude(triple.f2(cfg.b), flags);
  const double wa = std::pow(cfg.x - cfg.a, 3) / (2.0 * (cfg.b - cfg.a));
  const double wb = std::pow(cfg.b - cfg.x, 3) / (2.0 * (cfg.b - cfg.a));
  if (wa == 0.0 || wb == 0.0) flags.x_at_endpoint = true;

  const double rhs = prefactor(PrefactorKind::holder_t2, exps) *
                     (detail::logmean_term(wa, dx, da, q, flags) +
                      detail::logmean_term(wb, dx, db, q, flags));
  const double lhs = midpoint_lhs(triple, cfg, tol);
  const CheckReport hyp =
      check_hypotheses(triple, cfg.a, cfg.b, q, DerivOrder::second);
  return detail::assemble(Theorem::t2, BoundVariant::standard, lhs, rhs, hyp, flags);
}

// Midpoint deviation against the power-mean kernel bound on |f''|^q. The
// standard variant restores the endpoint derivative multipliers and uses the
// corrected kernel; the literal variant evaluates the formula as printed.
inline BoundReport bound_thm3(const FunctionTriple& triple, const EvalConfig& cfg,
                              double tol = 1e-10,
                              BoundVariant variant = BoundVariant::standard) {
  validate_bound_config(cfg);
  const HolderPair& exps = detail::require_exps(cfg);
  const double q = exps.q();
  if (!(q >= 1.0)) throw std::invalid_argument("bound_thm3: requires q >= 1");

  BoundFlags flags;
  const double dx = detail::deriv_magnitude(triple.f2(cfg.x), flags);
  const double da = detail::deriv_magnitude(triple.f2(cfg.a), flags);
  const double db = detail::deriv_magnitude(triple.f2(cfg.b), flags);
  const double wa = std::pow(cfg.x - cfg.a, 3) / (2.0 * (cfg.b - cfg.a));
  const double wb = std::pow(cfg.b - cfg.x, 3) / (2.0 * (cfg.b - cfg.a));
  if (wa == 0.0 || wb == 0.0) flags.x_at_endpoint = true;

  double sum;
  if (variant == BoundVariant::standard)
    sum = detail::kernel_term(wa, dx, da, q, [](double k) { return kernel_k3(k); },
                              flags) +
          detail::kernel_term(wb, dx, db, q, [](double k) { return kernel_k3(k); },
                              flags);
  else
    sum = detail::literal_term_t3(wa, dx, da, q, flags) +
          detail::literal_term_t3(wb, dx, db, q, flags);

  const double rhs = prefactor(PrefactorKind::pmean_t3, exps) * sum;
  const double lhs = midpoint_lhs(triple, cfg, tol);
  const CheckReport hyp =
      check_hypotheses(triple, cfg.a, cfg.b, q, DerivOrder::second);
  return detail::assemble(Theorem::t3, variant, lhs, rhs, hyp, flags);
}

// Trapezoid deviation against the Hoelder/log-mean bound on |f'|^q.
inline BoundReport bound_thm4(const FunctionTriple& triple, const EvalConfig& cfg,
                              double tol = 1e-10) {
  validate_bound_config(cfg);
  const HolderPair& exps = detail::require_holder(cfg);
  BoundFlags flags;
  const double rhs = detail::first_order_logmean_rhs(triple, cfg, exps, flags);
  const double lhs = trapezoid_lhs(triple, cfg, tol);
  const CheckReport hyp =
      check_hypotheses(triple, cfg.a, cfg.b, exps.q(), DerivOrder::first);
  return detail::assemble(Theorem::t4, BoundVariant::standard, lhs, rhs, hyp, flags);
}

// Point deviation |f(x) - mean| against the same right-hand side as
// bound_thm4; the two share one formula by construction.
inline BoundReport bound_thm1(const FunctionTriple& triple, const EvalConfig& cfg,
                              double tol = 1e-10) {
  validate_bound_config(cfg);
  const HolderPair& exps = detail::require_holder(cfg);
  BoundFlags flags;
  const double rhs = detail::first_order_logmean_rhs(triple, cfg, exps, flags);
  const double lhs = detail::point_lhs(triple, cfg, tol);
  const CheckReport hyp =
      check_hypotheses(triple, cfg.a, cfg.b, exps.q(), DerivOrder::first);
  return detail::assemble(Theorem::t1, BoundVariant::standard, lhs, rhs, hyp, flags);
}

// Trapezoid deviation against the power-mean kernel bound on |f'|^q.
inline BoundReport bound_thm5(const FunctionTriple& triple, const EvalConfig& cfg,
                              double tol = 1e-10) {
  validate_bound_config(cfg);
  const HolderPair& exps = detail::require_exps(cfg);
  const double q = exps.q();
  if (!(q >= 1.0)) throw std::invalid_argument("bound_thm5: requires q >= 1");

  BoundFlags flags;
  const double dx = detail::deriv_magnitude(triple.f1(cfg.x), flags);
  const double da = detail::deriv_magnitude(triple.f1(cfg.a), flags);
  const double db = detail::deriv_magnitude(triple.f1(cfg.b), flags);
  const double wa = (cfg.x - cfg.a) * (cfg.x - cfg.a) / (cfg.b - cfg.a);
  const double wb = (cfg.b - cfg.x) * (cfg.b - cfg.x) / (cfg.b - cfg.a);
  if (wa == 0.0 || wb == 0.0) flags.x_at_endpoint = true;

  const double rhs = prefactor(PrefactorKind::pmean_t5, exps) *
                     (detail::kernel_term(wa, dx, da, q,
                                          [](double k) { return kernel_k2(k); },
                                          flags) +
                      detail::kernel_term(wb, dx, db, q,
                                          [](double k) { return kernel_k2(k); },
                                          flags));
  const double lhs = trapezoid_lhs(triple, cfg, tol);
  const CheckReport hyp =
      check_hypotheses(triple, cfg.a, cfg.b, q, DerivOrder::first);
  return detail::assemble(Theorem::t5, BoundVariant::standard, lhs, rhs, hyp, flags);
}

// Equal-endpoint simplifications: the prefactor is dropped (it is < 1) and
// the two log-mean terms merge under a combined weight. Requires the
// endpoint derivative magnitudes to agree to 1e-9 relative.
inline BoundReport corollary_equal_endpoints(DerivOrder order,
                                             const FunctionTriple& triple,
                                             const EvalConfig& cfg, double q,
                                             double tol = 1e-10) {
  validate_bound_config(cfg);
  if (!(q >= 1.0))
    throw std::invalid_argument("corollary_equal_endpoints: requires q >= 1");

  BoundFlags flags;
  const auto& deriv = (order == DerivOrder::first) ? triple.f1 : triple.f2;
  const double da = detail::deriv_magnitude(deriv(cfg.a), flags);
  const double db = detail::deriv_magnitude(deriv(cfg.b), flags);
  if (std::abs(da - db) > 1e-9 * std::max({da, db, 1e-300}))
    throw std::invalid_argument(
        "corollary_equal_endpoints: endpoint derivative magnitudes differ");
  const double dx = detail::deriv_magnitude(deriv(cfg.x), flags);

  double weight, lhs;
  Theorem theorem;
  if (order == DerivOrder::second) {
    weight = (std::pow(cfg.x - cfg.a, 3) + std::pow(cfg.b - cfg.x, 3)) /
             (2.0 * (cfg.b - cfg.a));
    lhs = midpoint_lhs(triple, cfg, tol);
    theorem = Theorem::c1;
  } else {
    weight = ((cfg.x - cfg.a) * (cfg.x - cfg.a) +
              (cfg.b - cfg.x) * (cfg.b - cfg.x)) /
             (cfg.b - cfg.a);
    lhs = trapezoid_lhs(triple, cfg, tol);
    theorem = Theorem::c3;
  }
  const double rhs = detail::logmean_term(weight, dx, da, q, flags);
  const CheckReport hyp = check_hypotheses(triple, cfg.a, cfg.b, q, order);
  return detail::assemble(theorem, BoundVariant::standard, lhs, rhs, hyp, flags);
}

namespace detail {

enum class LhsKind { midpoint, trapezoid, point };

inline LhsKind lhs_kind(Theorem t) {
  switch (t) {
    case Theorem::t2:
    case Theorem::t3:
    case Theorem::c1:
      return LhsKind::midpoint;
    case Theorem::t4:
    case Theorem::t5:
    case Theorem::c3:
      return LhsKind::trapezoid;
    case Theorem::t1:
      return LhsKind::point;
  }
  return LhsKind::midpoint;
}

}  // namespace detail

// min{v1, v2}-style combinator: returns the report with the smallest finite
// right-hand side; ties keep the earliest. All reports must bound the same
// deviation (same lhs kind, same configuration).
inline BoundReport best_bound(std::span<const BoundReport> reports) {
  if (reports.empty())
    throw std::invalid_argument("best_bound: empty report list");
  const detail::LhsKind kind = detail::lhs_kind(reports.front().theorem);
  const double lhs0 = reports.front().lhs;
  for (const BoundReport& r : reports) {
    if (detail::lhs_kind(r.theorem) != kind)
      throw std::invalid_argument("best_bound: mixed left-hand-side kinds");
    if (std::abs(r.lhs - lhs0) > 1e-9 * std::max(1.0, std::abs(lhs0)))
      throw std::invalid_argument("best_bound: reports do not share one lhs");
  }
  std::size_t best = 0;
  bool best_finite = std::isfinite(reports[0].rhs);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const bool finite = std::isfinite(reports[i].rhs);
    if ((finite && !best_finite) ||
        (finite == best_finite && reports[i].rhs < reports[best].rhs)) {
      best = i;
      best_finite = finite;
    }
  }
  return reports[best];
}

struct HhReport {
  bool left_ok = false;
  bool right_ok = false;
  double midpoint_value = 0.0;
  double mean = 0.0;
  double endpoint_avg = 0.0;
};

// The classical double inequality for convex f:
// f((a+b)/2) <= mean(f) <= (f(a)+f(b))/2, checked to 1e-10.
inline HhReport classic_hh_check(const std::function<double(double)>& f, double a,
                                 double b, double tol = 1e-10) {
  if (!(a < b)) throw std::invalid_argument("classic_hh_check: requires a < b");
  HhReport r;
  r.mean = integrate(f, a, b, tol).value / (b - a);
  r.midpoint_value = f(0.5 * (a + b));
  r.endpoint_avg = 0.5 * (f(a) + f(b));
  const double slop = 1e-10 * std::max(1.0, std::abs(r.mean));
  r.left_ok = r.midpoint_value <= r.mean + slop;
  r.right_ok = r.mean <= r.endpoint_avg + slop;
  return r;
}

// The sharp integral majorant sitting between every deviation and its
// closed-form bound: weighted integrals of |f^(order)| along the two
// segments, with t^2 weights at second order and (1-t) at first order.
inline double integral_majorant(const FunctionTriple& triple, const EvalConfig& cfg,
                                DerivOrder order, double tol = 1e-10) {
  validate_bound_config(cfg);
  const double a = cfg.a, b = cfg.b, x = cfg.x;
  const auto& deriv = (order == DerivOrder::first) ? triple.f1 : triple.f2;

  double wa, wb;
  std::function<double(double)> weight_fn;
  if (order == DerivOrder::second) {
    wa = std::pow(x - a, 3) / (2.0 * (b - a));
    wb = std::pow(b - x, 3) / (2.0 * (b - a));
    weight_fn = [](double t) { return t * t; };
  } else {
    wa = (x - a) * (x - a) / (b - a);
    wb = (b - x) * (b - x) / (b - a);
    weight_fn = [](double t) { return 1.0 - t; };
  }

  auto term = [&](double w, double endpoint) {
    if (w == 0.0) return 0.0;
    auto integrand = [&](double t) {
      return weight_fn(t) * std::abs(deriv(t * x + (1.0 - t) * endpoint));
    };
    return w * integrate(integrand, 0.0, 1.0, tol).value;
  };
  return term(wa, a) + term(wb, b);
}

}  // namespace ggbound

#endif
