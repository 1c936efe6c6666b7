#ifndef GGBOUND_IDENTITIES_HPP
#define GGBOUND_IDENTITIES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

#include "ggbound/function_catalog.hpp"
#include "ggbound/quadrature.hpp"
#include "ggbound/scalar_kernels.hpp"

namespace ggbound {

// A point configuration (a, b, x) with an optional exponent pair.
struct EvalConfig {
  double a = 0.0;
  double b = 0.0;
  double x = 0.0;
  std::optional<HolderPair> exps;
};

inline void validate_identity_config(const EvalConfig& cfg) {
  if (!(std::isfinite(cfg.a) && std::isfinite(cfg.b) && std::isfinite(cfg.x)))
    throw std::invalid_argument("config: a, b, x must be finite");
  if (!(cfg.a < cfg.b))
    throw std::invalid_argument("config: requires a < b");
  if (!(cfg.a <= cfg.x && cfg.x <= cfg.b))
    throw std::invalid_argument("config: requires x in [a, b]");
}

inline void validate_bound_config(const EvalConfig& cfg) {
  validate_identity_config(cfg);
  if (!(cfg.a > 0.0))
    throw std::invalid_argument("config: bound evaluation requires a > 0");
}

enum class IdentityVariant { corrected, paper_literal };

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  double tol_used = 0.0;
  IdentityVariant variant = IdentityVariant::corrected;
};

namespace detail {

// Weighted segment integral w * I(t -> weight_fn(t) * d(t*x + (1-t)*e));
// a vanishing outer weight short-circuits to 0 so degenerate endpoint
// configurations never evaluate the inner integral.
template <class WeightFn>
double segment_term(const std::function<double(double)>& deriv, double w,
                    double x, double endpoint, WeightFn&& weight_fn, double tol) {
  if (w == 0.0) return 0.0;
  auto integrand = [&](double t) {
    return weight_fn(t) * deriv(t * x + (1.0 - t) * endpoint);
  };
  return w * integrate(integrand, 0.0, 1.0, tol).value;
}

}  // namespace detail

// Second-derivative identity: the midpoint-type deviation equals the
// t^2-weighted integrals of f'' along the segments [a, x] and [x, b].
inline IdentityReport lemma1_check(const FunctionTriple& triple,
                                   const EvalConfig& cfg, double tol = 1e-10) {
  validate_identity_config(cfg);
  const double a = cfg.a, b = cfg.b, x = cfg.x;
  const double mean = integrate(triple.f, a, b, tol).value / (b - a);
  const double lhs = mean - triple.f(x) + (x - 0.5 * (a + b)) * triple.f1(x);

  const double wa = std::pow(x - a, 3) / (2.0 * (b - a));
  const double wb = std::pow(b - x, 3) / (2.0 * (b - a));
  auto t2 = [](double t) { return t * t; };
  const double rhs = detail::segment_term(triple.f2, wa, x, a, t2, tol) +
                     detail::segment_term(triple.f2, wb, x, b, t2, tol);

  return {lhs, rhs, lhs - rhs, tol, IdentityVariant::corrected};
}

// First-derivative trapezoid identity. The corrected variant carries weight
// (t-1) on the a-segment and (1-t) on the b-segment, which is what
// integration by parts produces; the literal variant keeps the printed
// weights, which flip the sign of the right-hand side.
inline IdentityReport lemma2_check(const FunctionTriple& triple,
                                   const EvalConfig& cfg, double tol = 1e-10,
                                   IdentityVariant variant = IdentityVariant::corrected) {
  validate_identity_config(cfg);
  const double a = cfg.a, b = cfg.b, x = cfg.x;
  const double mean = integrate(triple.f, a, b, tol).value / (b - a);
  const double lhs =
      ((b - x) * triple.f(b) + (x - a) * triple.f(a)) / (b - a) - mean;

  const double wa = (x - a) * (x - a) / (b - a);
  const double wb = (b - x) * (b - x) / (b - a);
  auto one_minus_t = [](double t) { return 1.0 - t; };
  auto t_minus_one = [](double t) { return t - 1.0; };

  double rhs;
  if (variant == IdentityVariant::corrected)
    rhs = detail::segment_term(triple.f1, wa, x, a, t_minus_one, tol) +
          detail::segment_term(triple.f1, wb, x, b, one_minus_t, tol);
  else
    rhs = detail::segment_term(triple.f1, wa, x, a, one_minus_t, tol) +
          detail::segment_term(triple.f1, wb, x, b, t_minus_one, tol);

  return {lhs, rhs, lhs - rhs, tol, variant};
}

}  // namespace ggbound

#endif
