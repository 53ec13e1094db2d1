#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "adialab/errors.hpp"
#include "adialab/quadrature.hpp"
#include "adialab/summation.hpp"

using namespace adialab;

TEST_CASE("integrate_line: Gaussian moments") {
  const double rt_pi = std::sqrt(std::numbers::pi);
  CHECK(integrate_line([](double x) { return std::exp(-x * x); }, 1.0) == doctest::Approx(rt_pi).epsilon(1e-13));
  CHECK(std::abs(integrate_line([](double x) { return x * std::exp(-x * x); }, 1.0)) < 1e-14);
  CHECK(integrate_line([](double x) { return x * x * std::exp(-x * x); }, 1.0) ==
        doctest::Approx(rt_pi / 2).epsilon(1e-13));
}

TEST_CASE("integrate_line: error estimate honoured across decay rates") {
  for (double t : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double exact = std::sqrt(std::numbers::pi / t);
    const double value = integrate_line([t](double x) { return std::exp(-t * x * x); }, t);
    CHECK(std::abs(value - exact) <= 1e-11 * exact);
  }
}

TEST_CASE("default truncation radius satisfies the Gaussian tail rule") {
  QuadratureSpec spec;
  for (double t : {0.05, 1.0, 3.0, 40.0}) {
    const double r = spec.radius_for(t);
    CHECK(std::exp(-t * r * r) < spec.abs_tol / 10);
    CHECK(r >= 8.0 / std::sqrt(t));
  }
  spec.abs_tol = 1e-40;
  CHECK(std::exp(-2.0 * spec.radius_for(2.0) * spec.radius_for(2.0)) < 1e-41);
}

TEST_CASE("QuadratureSpec validation") {
  QuadratureSpec bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = {};
  bad.max_refinements = 0;
  CHECK_THROWS_AS(integrate_line([](double) { return 0.0; }, 1.0, bad), ParameterError);
  CHECK_THROWS_AS(integrate_line([](double) { return 0.0; }, -1.0), ParameterError);
}

TEST_CASE("integrate_line is linear on random Gaussian-envelope integrands") {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> rate(0.3, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double t = rate(rng);
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), shift = coef(rng);
    const double a = coef(rng), b = coef(rng);
    const auto f = [=](double x) { return (c0 + c1 * x) * std::exp(-t * x * x); };
    const auto g = [=](double x) { return std::cos(c2 * x + shift) * std::exp(-t * x * x); };
    const double lhs = integrate_line([&](double x) { return a * f(x) + b * g(x); }, t);
    const double rhs = a * integrate_line(f, t) + b * integrate_line(g, t);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * (std::abs(a) + std::abs(b) + 1.0));
  }
}

TEST_CASE("integrate_line of odd integrands vanishes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = u(rng), w = u(rng), c = u(rng);
    const auto odd = [=](double x) { return (c * x * x * x + std::sin(w * x)) * std::exp(-t * x * x); };
    CHECK(std::abs(integrate_line(odd, t)) <= QuadratureSpec{}.abs_tol * 10);
  }
}

TEST_CASE("integrate_plane") {
  CHECK(integrate_plane([](double x, double y) { return std::exp(-x * x - y * y); }, 1.0) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(std::abs(integrate_plane([](double x, double y) { return y * std::exp(-x * x - 2 * y * y); }, 1.0)) < 1e-13);
  // anisotropic inner rate
  const double v = integrate_plane([](double x, double y) { return std::exp(-x * x - 0.01 * y * y); }, 1.0,
                                   [](double) { return 0.01; });
  CHECK(v == doctest::Approx(std::numbers::pi / 0.1).epsilon(1e-11));
}

TEST_CASE("non-convergence reports the last two estimates") {
  QuadratureSpec spec;
  spec.max_refinements = 1;
  const auto wild = [](double x) { return std::cos(400.0 * x) * std::exp(-x * x / 50.0); };
  try {
    integrate_line(wild, 1.0 / 50.0, spec);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.previous_estimate()));
    CHECK(std::isfinite(e.last_estimate()));
    CHECK(std::string(e.what()).find("last estimates") != std::string::npos);
  }
  try {
    integrate_plane([&](double x, double y) { return wild(y) * std::exp(-x * x); }, 1.0 / 50.0, spec);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("inner axis") != std::string::npos);
  }
}

TEST_CASE("integrate_interval on finite ranges") {
  CHECK(integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate_interval([](double x) { return x; }, 1.0, 1.0) == 0.0);
  CHECK(integrate_interval([](double x) { return x; }, 1.0, 0.0) == doctest::Approx(-0.5));
}

TEST_CASE("pairwise_sum is order-fixed and accurate") {
  std::vector<double> v(100001, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(10000.1).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}
