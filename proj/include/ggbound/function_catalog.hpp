#ifndef GGBOUND_FUNCTION_CATALOG_HPP
#define GGBOUND_FUNCTION_CATALOG_HPP

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggbound {

// Analytic status of "|f^(n)|^q is geometrically convex and monotonically
// decreasing" for a family; `unknown` means decide numerically.
enum class GgStatus { yes, no, unknown };

enum class CatalogRole { hypothesis_satisfying, hypothesis_violating, degenerate };

using ParamList = std::vector<std::pair<std::string, double>>;

// A test function with exact first and second derivatives.
struct FunctionTriple {
  std::string name;
  std::string family;
  ParamList params;
  std::function<double(double)> f;
  std::function<double(double)> f1;
  std::function<double(double)> f2;
  double domain_lo = 0.0;  // open interval (domain_lo, domain_hi)
  double domain_hi = std::numeric_limits<double>::infinity();
  GgStatus first_order_gg = GgStatus::unknown;
  GgStatus second_order_gg = GgStatus::unknown;

  bool contains(double lo, double hi) const {
    return domain_lo < lo && hi < domain_hi;
  }
};

struct CatalogEntry {
  FunctionTriple triple;
  CatalogRole intended_role;
};

namespace detail {

inline std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string param_string(const ParamList& params, char sep) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out.push_back(sep);
    out += key + "=" + format_param(value);
  }
  return out;
}

inline std::string triple_name(const std::string& family, const ParamList& params) {
  if (params.empty()) return family;
  return family + "(" + param_string(params, ',') + ")";
}

}  // namespace detail

// f(x) = c x^(-alpha). All derivative powers are log-log linear, so the
// geometric-convexity and decrease hypotheses hold exactly at every order.
inline FunctionTriple make_power(double c, double alpha) {
  if (!(c > 0.0) || !(alpha > 0.0))
    throw std::domain_error("make_power: c and alpha must be positive");
  FunctionTriple t;
  t.family = "power";
  t.params = {{"c", c}, {"alpha", alpha}};
  t.name = detail::triple_name(t.family, t.params);
  t.f = [c, alpha](double x) { return c * std::pow(x, -alpha); };
  t.f1 = [c, alpha](double x) { return -c * alpha * std::pow(x, -alpha - 1.0); };
  t.f2 = [c, alpha](double x) {
    return c * alpha * (alpha + 1.0) * std::pow(x, -alpha - 2.0);
  };
  t.domain_lo = 0.0;
  t.first_order_gg = GgStatus::yes;
  t.second_order_gg = GgStatus::yes;
  return t;
}

// f(x) = exp(beta/x). |f'|^q is geometrically convex and decreasing on any
// positive interval; for |f''|^q the status is left to the numeric checker.
inline FunctionTriple make_exp_reciprocal(double beta) {
  if (!(beta > 0.0))
    throw std::domain_error("make_exp_reciprocal: beta must be positive");
  FunctionTriple t;
  t.family = "exp_reciprocal";
  t.params = {{"beta", beta}};
  t.name = detail::triple_name(t.family, t.params);
  t.f = [beta](double x) { return std::exp(beta / x); };
  t.f1 = [beta](double x) { return -(beta / (x * x)) * std::exp(beta / x); };
  t.f2 = [beta](double x) {
    const double x2 = x * x;
    return std::exp(beta / x) * (beta * beta / (x2 * x2) + 2.0 * beta / (x2 * x));
  };
  t.domain_lo = 0.0;
  t.first_order_gg = GgStatus::yes;
  t.second_order_gg = GgStatus::unknown;
  return t;
}

// f(x) = exp(-x): |f'| is decreasing but log-concave in log coordinates,
// so it is the control case the convexity checker must reject.
inline FunctionTriple make_negative_example() {
  FunctionTriple t;
  t.family = "exp_decay";
  t.name = t.family;
  t.f = [](double x) { return std::exp(-x); };
  t.f1 = [](double x) { return -std::exp(-x); };
  t.f2 = [](double x) { return std::exp(-x); };
  t.domain_lo = -std::numeric_limits<double>::infinity();
  t.first_order_gg = GgStatus::no;
  t.second_order_gg = GgStatus::no;
  return t;
}

// f(x) = x^2, exposed for the identity checks (constant second derivative).
inline FunctionTriple make_quadratic() {
  FunctionTriple t;
  t.family = "quadratic";
  t.name = t.family;
  t.f = [](double x) { return x * x; };
  t.f1 = [](double x) { return 2.0 * x; };
  t.f2 = [](double) { return 2.0; };
  t.domain_lo = -std::numeric_limits<double>::infinity();
  t.first_order_gg = GgStatus::no;
  t.second_order_gg = GgStatus::yes;
  return t;
}

inline FunctionTriple make_linear(double slope, double intercept) {
  FunctionTriple t;
  t.family = "linear";
  t.params = {{"slope", slope}, {"intercept", intercept}};
  t.name = detail::triple_name(t.family, t.params);
  t.f = [slope, intercept](double x) { return slope * x + intercept; };
  t.f1 = [slope](double) { return slope; };
  t.f2 = [](double) { return 0.0; };
  t.domain_lo = -std::numeric_limits<double>::infinity();
  t.first_order_gg = GgStatus::yes;  // |f'| constant
  t.second_order_gg = GgStatus::unknown;
  return t;
}

inline FunctionTriple make_constant(double value) {
  FunctionTriple t;
  t.family = "constant";
  t.params = {{"value", value}};
  t.name = detail::triple_name(t.family, t.params);
  t.f = [value](double) { return value; };
  t.f1 = [](double) { return 0.0; };
  t.f2 = [](double) { return 0.0; };
  t.domain_lo = -std::numeric_limits<double>::infinity();
  t.first_order_gg = GgStatus::unknown;
  t.second_order_gg = GgStatus::unknown;
  return t;
}

// Built-in registry, in deterministic order: the power family, the
// exp-reciprocal family, the convexity counterexample and a constant.
inline const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (double c : {1.0, 100.0})
      for (double alpha : {0.5, 1.0, 2.0, 3.0})
        v.push_back({make_power(c, alpha), CatalogRole::hypothesis_satisfying});
    for (double beta : {0.5, 1.0, 2.0})
      v.push_back({make_exp_reciprocal(beta), CatalogRole::hypothesis_satisfying});
    v.push_back({make_negative_example(), CatalogRole::hypothesis_violating});
    v.push_back({make_constant(1.0), CatalogRole::degenerate});
    return v;
  }();
  return entries;
}

namespace detail {

inline double param_or(const ParamList& params, const std::string& key,
                       double fallback) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

inline void reject_unknown_params(const std::string& family,
                                  const ParamList& params,
                                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok)
      throw std::invalid_argument("unknown parameter '" + key +
                                  "' for family '" + family + "'");
  }
}

}  // namespace detail

// Construct a triple from a family name plus named parameters; the entry
// point behind the CLI flags and the sweep configuration file.
inline FunctionTriple make_from_family(const std::string& family,
                                       const ParamList& params = {}) {
  if (family == "power") {
    detail::reject_unknown_params(family, params, {"c", "alpha"});
    return make_power(detail::param_or(params, "c", 1.0),
                      detail::param_or(params, "alpha", 1.0));
  }
  if (family == "exp_reciprocal") {
    detail::reject_unknown_params(family, params, {"beta"});
    return make_exp_reciprocal(detail::param_or(params, "beta", 1.0));
  }
  if (family == "exp_decay") {
    detail::reject_unknown_params(family, params, {});
    return make_negative_example();
  }
  if (family == "quadratic") {
    detail::reject_unknown_params(family, params, {});
    return make_quadratic();
  }
  if (family == "linear") {
    detail::reject_unknown_params(family, params, {"slope", "intercept"});
    return make_linear(detail::param_or(params, "slope", -1.0),
                       detail::param_or(params, "intercept", 3.0));
  }
  if (family == "constant") {
    detail::reject_unknown_params(family, params, {"value"});
    return make_constant(detail::param_or(params, "value", 1.0));
  }
  throw std::invalid_argument("unknown function family '" + family + "'");
}

}  // namespace ggbound

#endif
