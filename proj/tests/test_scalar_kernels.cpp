#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ggbound/quadrature.hpp"
#include "ggbound/scalar_kernels.hpp"

using namespace ggbound;

namespace {

// deterministic log-uniform sample in [1e-3, 1e3]
double log_uniform(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng()) / 1.8446744073709552e19;
  return std::pow(10.0, -3.0 + 6.0 * u);
}

double quad_log_mean(double u, double v) {
  const double scale = std::max({1.0, u, v});
  return integrate([u, v](double t) { return std::pow(u, t) * std::pow(v, 1.0 - t); },
                   0.0, 1.0, 1e-13 * scale)
      .value;
}

}  // namespace

TEST_CASE("log_mean examples") {
  CHECK(log_mean(3.0, 3.0) == 3.0);
  CHECK(log_mean(0.1, 0.1) == 0.1);
  CHECK(std::abs(log_mean(4.0, 2.0) - 2.8853900817779268) <= 1e-14 * 2.8853900817779268);
  const double e = std::exp(1.0);
  CHECK(std::abs(log_mean(e, 1.0) - (e - 1.0)) <= 1e-14 * (e - 1.0));
}

TEST_CASE("log_mean zero and negative arguments") {
  const auto zero = log_mean_checked(0.0, 2.5);
  CHECK(zero.value == 0.0);
  CHECK(zero.degenerate);
  CHECK(log_mean_checked(2.5, 0.0).degenerate);
  CHECK_FALSE(log_mean_checked(1.0, 2.0).degenerate);
  CHECK_THROWS_AS(log_mean(-1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(log_mean(1.0, -2.0), std::domain_error);
}

TEST_CASE("log_mean symmetry and bracketing over random pairs") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const double u = log_uniform(rng);
    const double v = log_uniform(rng);
    const double luv = log_mean(u, v);
    const double lvu = log_mean(v, u);
    CHECK(std::abs(luv - lvu) <= 1e-14 * std::abs(luv));
    const double lo = std::min(u, v), hi = std::max(u, v);
    CHECK(luv >= lo * (1.0 - 1e-14));
    CHECK(luv <= hi * (1.0 + 1e-14));
  }
}

TEST_CASE("log_mean homogeneity") {
  std::mt19937_64 rng(7);
  for (double s : {1e-5, 3.0, 1e7}) {
    for (int i = 0; i < 50; ++i) {
      const double u = log_uniform(rng);
      const double v = (i % 3 == 0) ? u * (1.0 + 1e-8) : log_uniform(rng);
      const double direct = log_mean(s * u, s * v);
      const double scaled = s * log_mean(u, v);
      CHECK(std::abs(direct - scaled) <= 1e-13 * std::abs(scaled));
    }
  }
}

TEST_CASE("log_mean near-equal series branch agrees with the oracle") {
  for (double d : {9.9e-7, 1.01e-6, -9.9e-7, -1.01e-6}) {
    const double u = std::exp(d);
    CHECK(std::abs(log_mean(u, 1.0) - quad_log_mean(u, 1.0)) <= 1e-12);
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_k3(1.0) == 1.0 / 3.0);
  CHECK(kernel_k2(1.0) == 0.5);
  CHECK(std::abs(kernel_k3(4.0) - 0.97473765013439030) <= 1e-14);
  CHECK(std::abs(kernel_k2(4.0) - 0.83967921530972414) <= 1e-14);
  const double e = std::exp(1.0);
  CHECK(std::abs(kernel_k3(e) - (e - 2.0)) <= 1e-14);
  CHECK(std::abs(kernel_k2(e) - (e - 2.0)) <= 1e-14);

  CHECK(kernel_k3_checked(0.0).degenerate);
  CHECK(kernel_k3_checked(0.0).value == 0.0);
  CHECK(kernel_k2_checked(0.0).degenerate);
  CHECK_THROWS_AS(kernel_k3(-0.5), std::domain_error);
  CHECK_THROWS_AS(kernel_k2(-0.5), std::domain_error);
}

TEST_CASE("kernels match adaptive quadrature on a log grid") {
  for (int i = 0; i < 50; ++i) {
    const double k = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    const double scale = std::max(1.0, k);
    const double q3 =
        integrate([k](double t) { return t * t * std::pow(k, t); }, 0.0, 1.0,
                  1e-13 * scale)
            .value;
    const double q2 =
        integrate([k](double t) { return (1.0 - t) * std::pow(k, t); }, 0.0, 1.0,
                  1e-13 * scale)
            .value;
    CHECK(std::abs(kernel_k3(k) - q3) <= 1e-10 * std::max(1.0, kernel_k3(k)));
    CHECK(std::abs(kernel_k2(k) - q2) <= 1e-10 * std::max(1.0, kernel_k2(k)));
  }
}

TEST_CASE("log_mean matches its integral representation on random pairs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const double u = log_uniform(rng);
    const double v = log_uniform(rng);
    const double l = log_mean(u, v);
    CHECK(std::abs(l - quad_log_mean(u, v)) <= 1e-10 * std::max(1.0, l));
  }
}

TEST_CASE("closed form and series agree across the branch switch") {
  for (double sign : {1.0, -1.0}) {
    for (double eps : {1e-9, -1e-9}) {
      const double lnk = sign * 0.1 * (1.0 + eps);
      const double k = std::exp(lnk);
      const double closed = detail::kernel_k3_closed(k);
      const double series = detail::kernel_k3_series(std::log(k));
      CHECK(std::abs(closed - series) <= 1e-11 * std::abs(series));
      const double closed2 = detail::kernel_k2_closed(k);
      const double series2 = detail::kernel_k2_series(std::log(k));
      CHECK(std::abs(closed2 - series2) <= 1e-11 * std::abs(series2));
    }
  }
}

TEST_CASE("kernel range bracket") {
  for (int i = 0; i < 50; ++i) {
    const double k = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    const double v = kernel_k3(k);
    CHECK(v > 0.0);
    CHECK(v <= std::max(1.0 / 3.0, k) * (1.0 + 1e-14));
  }
}

TEST_CASE("prefactor values") {
  CHECK(std::abs(prefactor(PrefactorKind::holder_t2, HolderPair::holder(2.0)) -
                 0.44721359549995794) <= 1e-15);
  CHECK(prefactor(PrefactorKind::pmean_t3, HolderPair::power_mean(1.0)) == 1.0);
  CHECK(std::abs(prefactor(PrefactorKind::pmean_t5, HolderPair::power_mean(2.0)) -
                 0.70710678118654752) <= 1e-15);
}

TEST_CASE("prefactor brackets over the exponent range") {
  for (int i = 1; i <= 50; ++i) {
    const double p = 1.0 + (49.0 * i) / 50.0;  // (1, 50]
    const auto h = HolderPair::holder(p);
    const double f2 = prefactor(PrefactorKind::holder_t2, h);
    CHECK(f2 > 1.0 / 3.0);
    CHECK(f2 < 1.0);
    CHECK(prefactor(PrefactorKind::holder_t1t4, h) < 1.0);
  }
  for (double q : {1.0, 1.5, 2.0, 5.0, 50.0}) {
    const double f5 = prefactor(PrefactorKind::pmean_t5, HolderPair::power_mean(q));
    CHECK(f5 > 0.5);
    CHECK(f5 <= 1.0);
  }
}

TEST_CASE("exponent pair validation") {
  CHECK_THROWS_AS(HolderPair::holder(1.0), std::domain_error);
  CHECK_THROWS_AS(HolderPair::holder(2.0, 3.0), std::domain_error);
  CHECK_THROWS_AS(HolderPair::power_mean(0.5), std::domain_error);
  CHECK(HolderPair::holder(2.0).q() == 2.0);
  CHECK(std::abs(HolderPair::holder(4.0).q() - 4.0 / 3.0) <= 1e-15);
  CHECK_FALSE(HolderPair::power_mean(2.0).has_p());
  CHECK_THROWS_AS(HolderPair::power_mean(2.0).p(), std::domain_error);
  // a power-mean pair cannot feed a Hoelder prefactor
  CHECK_THROWS_AS(prefactor(PrefactorKind::holder_t2, HolderPair::power_mean(2.0)),
                  std::domain_error);
}
