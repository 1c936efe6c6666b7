#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ggbound/quadrature.hpp"

using ggbound::integrate;

TEST_CASE("polynomials up to degree 5 are integrated to machine precision") {
  for (int n = 0; n <= 5; ++n) {
    auto g = [n](double t) { return std::pow(t, n); };
    const auto r = integrate(g, 0.0, 1.0, 1e-12);
    CHECK(std::abs(r.value - 1.0 / (n + 1)) <= 1e-14);
    CHECK(r.err_estimate <= 1e-12);
    CHECK(r.evaluations == 15);  // single panel suffices
  }
}

TEST_CASE("analytic antiderivative checks") {
  CHECK(std::abs(integrate([](double u) { return 1.0 / u; }, 1.0, 2.0, 1e-12).value -
                 std::log(2.0)) <= 1e-12);
  // matches the closed-form t^2-weighted kernel at k = 4
  CHECK(std::abs(integrate([](double t) { return t * t * std::pow(4.0, t); }, 0.0,
                           1.0, 1e-12)
                     .value -
                 0.97473765013439030) <= 1e-11);
  CHECK(std::abs(integrate([](double t) { return (1.0 - t) * std::pow(4.0, t); },
                           0.0, 1.0, 1e-12)
                     .value -
                 0.83967921530972414) <= 1e-11);
}

TEST_CASE("additivity over a split point") {
  auto g = [](double x) { return std::pow(x, -2.0); };
  const auto whole = integrate(g, 1.0, 2.0, 1e-12);
  const auto left = integrate(g, 1.0, 1.37, 1e-12);
  const auto right = integrate(g, 1.37, 2.0, 1e-12);
  CHECK(std::abs(left.value + right.value - whole.value) <=
        2.0 * (whole.err_estimate + left.err_estimate + right.err_estimate) + 1e-14);
}

TEST_CASE("linearity in the integrand") {
  auto g = [](double x) { return std::exp(1.0 / x); };
  const double base = integrate(g, 0.5, 3.0, 1e-12).value;
  const double scaled =
      integrate([&g](double x) { return 5.5 * g(x); }, 0.5, 3.0, 1e-12).value;
  CHECK(std::abs(scaled - 5.5 * base) <= 1e-13 * std::abs(scaled));
}

TEST_CASE("deterministic: repeated runs are bit-identical") {
  auto g = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  const auto r1 = integrate(g, 0.0, 4.0, 1e-11);
  const auto r2 = integrate(g, 0.0, 4.0, 1e-11);
  CHECK(r1.value == r2.value);
  CHECK(r1.err_estimate == r2.err_estimate);
  CHECK(r1.evaluations == r2.evaluations);
}

TEST_CASE("non-finite integrand values are reported with the abscissa") {
  auto g = [](double x) { return std::sqrt(x - 1.2); };  // NaN left of 1.2
  try {
    integrate(g, 1.0, 2.0, 1e-10);
    FAIL("expected evaluation_error");
  } catch (const ggbound::evaluation_error& e) {
    CHECK(e.abscissa < 1.2);
    CHECK(e.abscissa >= 1.0);
  }
}

TEST_CASE("subdivision limit reached carries the best estimate") {
  auto g = [](double x) { return 1.0 / std::sqrt(x); };  // endpoint singularity
  try {
    integrate(g, 0.0, 1.0, 1e-12);
    FAIL("expected convergence_error");
  } catch (const ggbound::convergence_error& e) {
    CHECK(std::abs(e.best_estimate - 2.0) < 1e-3);
  }
}

TEST_CASE("argument validation") {
  auto g = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(g, 2.0, 1.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(integrate(g, 0.0, 1.0, 1e-15), std::invalid_argument);
}
