#ifndef GGBOUND_SCALAR_KERNELS_HPP
#define GGBOUND_SCALAR_KERNELS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ggbound {

// Exponent pair for the Hoelder-route and power-mean-route bounds.
// Hoelder mode carries conjugate exponents p, q > 1 with 1/p + 1/q = 1;
// power-mean mode carries only q >= 1.
class HolderPair {
 public:
  enum class Mode { holder, power_mean };

  static HolderPair holder(double p) {
    if (!(std::isfinite(p) && p > 1.0))
      throw std::domain_error("HolderPair: holder mode requires p > 1");
    return HolderPair(Mode::holder, p, p / (p - 1.0));
  }

  static HolderPair holder(double p, double q) {
    if (!(std::isfinite(p) && p > 1.0 && std::isfinite(q) && q > 1.0))
      throw std::domain_error("HolderPair: holder mode requires p > 1, q > 1");
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
      throw std::domain_error("HolderPair: p and q are not conjugate");
    return HolderPair(Mode::holder, p, q);
  }

  static HolderPair power_mean(double q) {
    if (!(std::isfinite(q) && q >= 1.0))
      throw std::domain_error("HolderPair: power-mean mode requires q >= 1");
    return HolderPair(Mode::power_mean,
                      std::numeric_limits<double>::quiet_NaN(), q);
  }

  Mode mode() const { return mode_; }
  bool has_p() const { return mode_ == Mode::holder; }

  double p() const {
    if (!has_p())
      throw std::domain_error("HolderPair: p is absent in power-mean mode");
    return p_;
  }

  double q() const { return q_; }

 private:
  HolderPair(Mode mode, double p, double q) : mode_(mode), p_(p), q_(q) {}

  Mode mode_;
  double p_;
  double q_;
};

// Scalar value plus a marker for arguments that forced a continuous-limit
// result (a zero argument, typically from a vanished derivative).
struct ScalarResult {
  double value = 0.0;
  bool degenerate = false;
};

// Logarithmic mean L(u, v) = (u - v) / (ln u - ln v), extended continuously:
// L(c, c) = c and L(u, 0) = 0. Equals the integral of u^t v^(1-t) over [0,1].
inline ScalarResult log_mean_checked(double u, double v) {
  if (u < 0.0 || v < 0.0)
    throw std::domain_error("log_mean: negative argument");
  if (u == 0.0 || v == 0.0) return {0.0, true};
  if (u == v) return {u, false};

  // ln(u/v) through log1p keeps full relative accuracy when u ~ v, which the
  // plain difference of logs loses to cancellation.
  const double w = (u - v) / v;
  const double d = (w > -0.9 && w < 1e15) ? std::log1p(w)
                                          : std::log(u) - std::log(v);
  if (std::abs(d) >= 1e-6) return {(u - v) / d, false};
  // 3-term expansion of w / log1p(w); next term is O(w^3) ~ 1e-19 here.
  return {v * (1.0 + w * (0.5 - w / 12.0)), false};
}

inline double log_mean(double u, double v) { return log_mean_checked(u, v).value; }

namespace detail {

// Closed form of the t^2-weighted kernel; the last term is 2(k-1), which is
// what the integral actually produces (a bare 2k fails continuity at k = 1).
inline double kernel_k3_closed(double k) {
  const double l = std::log(k);
  return k / l - 2.0 * k / (l * l) + 2.0 * (k - 1.0) / (l * l * l);
}

inline double kernel_k3_series(double lnk) {
  double term = 1.0;
  double sum = 1.0 / 3.0;
  for (int n = 1; n <= 40; ++n) {
    term *= lnk / n;
    const double c = term / (n + 3);
    sum += c;
    if (std::abs(c) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

inline double kernel_k2_closed(double k) {
  const double l = std::log(k);
  return ((k - 1.0) - l) / (l * l);
}

inline double kernel_k2_series(double lnk) {
  double term = 1.0;
  double sum = 0.5;
  for (int n = 1; n <= 40; ++n) {
    term *= lnk / n;
    const double c = term / ((n + 1) * (n + 2));
    sum += c;
    if (std::abs(c) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

// kernel_k3(k) = integral of t^2 k^t over [0,1]. Series for |ln k| < 0.1
// avoids the (ln k)^3 cancellation; kernel_k3(1) = 1/3, kernel_k3(0) = 0.
inline ScalarResult kernel_k3_checked(double k) {
  if (k < 0.0) throw std::domain_error("kernel_k3: negative argument");
  if (k == 0.0) return {0.0, true};
  const double lnk = std::log(k);
  if (std::abs(lnk) < 0.1) return {detail::kernel_k3_series(lnk), false};
  return {detail::kernel_k3_closed(k), false};
}

inline double kernel_k3(double k) { return kernel_k3_checked(k).value; }

// kernel_k2(k) = integral of (1-t) k^t over [0,1] = (k - ln k - 1)/(ln k)^2;
// kernel_k2(1) = 1/2, kernel_k2(0) = 0.
inline ScalarResult kernel_k2_checked(double k) {
  if (k < 0.0) throw std::domain_error("kernel_k2: negative argument");
  if (k == 0.0) return {0.0, true};
  const double lnk = std::log(k);
  if (std::abs(lnk) < 0.1) return {detail::kernel_k2_series(lnk), false};
  return {detail::kernel_k2_closed(k), false};
}

inline double kernel_k2(double k) { return kernel_k2_checked(k).value; }

enum class PrefactorKind { holder_t2, holder_t1t4, pmean_t3, pmean_t5 };

// Constants multiplying every bound: (2p+1)^(-1/p) and (p+1)^(-1/p) from the
// Hoelder split, (1/3)^(1-1/q) and (1/2)^(1-1/q) from the power-mean split.
inline double prefactor(PrefactorKind kind, const HolderPair& exps) {
  switch (kind) {
    case PrefactorKind::holder_t2: {
      const double p = exps.p();
      return std::pow(2.0 * p + 1.0, -1.0 / p);
    }
    case PrefactorKind::holder_t1t4: {
      const double p = exps.p();
      return std::pow(p + 1.0, -1.0 / p);
    }
    case PrefactorKind::pmean_t3:
      return std::pow(1.0 / 3.0, 1.0 - 1.0 / exps.q());
    case PrefactorKind::pmean_t5:
      return std::pow(0.5, 1.0 - 1.0 / exps.q());
  }
  throw std::domain_error("prefactor: unknown kind");
}

}  // namespace ggbound

#endif
