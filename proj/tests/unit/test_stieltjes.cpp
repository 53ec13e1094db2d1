#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "adialab/errors.hpp"
#include "adialab/quadrature.hpp"
#include "adialab/stieltjes.hpp"

using namespace adialab;

namespace {

// Quadrature oracle for power laws: dN = c s tau^{s-1} dtau, tau = lambda sin^2(theta).
double power_law_by_quadrature(double c, double s, int q, double lambda) {
  const auto f = [=](double theta) {
    const double sn = std::sin(theta), cs = std::cos(theta);
    const double tau = lambda * sn * sn;
    const double jac = 2.0 * lambda * sn * cs;
    return std::pow(lambda - tau, 0.5 * q) * c * s * std::pow(tau, s - 1.0) * jac;
  };
  return integrate_interval(f, 0.0, 0.5 * std::numbers::pi);
}

}  // namespace

TEST_CASE("power-law Stieltjes integral: sqrt(tau)/pi, q = 1") {
  const auto n = LeafwiseCountingFunction::power_law(1.0 / std::numbers::pi, 0.5);
  CHECK(stieltjes_power_integral(n, 1, 4.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(power_law_by_quadrature(1.0 / std::numbers::pi, 0.5, 1, 4.0) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("power-law closed form matches the quadrature oracle") {
  for (double s : {0.5, 1.0, 1.5, 2.5})
    for (int q : {1, 2, 3})
      for (double lambda : {0.3, 2.0, 17.0}) {
        const auto n = LeafwiseCountingFunction::power_law(0.7, s);
        CHECK(stieltjes_power_integral(n, q, lambda) ==
              doctest::Approx(power_law_by_quadrature(0.7, s, q, lambda)).epsilon(1e-9));
      }
}

TEST_CASE("jump-list Stieltjes integral") {
  const auto atom = LeafwiseCountingFunction::jumps({{0.0, 3.0}});
  CHECK(stieltjes_power_integral(atom, 2, 5.0) == doctest::Approx(15.0));
  const auto two = LeafwiseCountingFunction::jumps({{4.0, 1.0}, {1.0, 2.0}});
  CHECK(stieltjes_power_integral(two, 2, 3.0) == doctest::Approx(4.0));
  CHECK(stieltjes_power_integral(two, 2, 4.0) == doctest::Approx(6.0));
  CHECK(two(0.5) == 0.0);
  CHECK(two(1.0) == 2.0);
  CHECK(two(10.0) == 3.0);
}

TEST_CASE("Stieltjes integral vanishes below the support and is monotone") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  const auto pl = LeafwiseCountingFunction::power_law(2.0, 1.5);
  const auto jl = LeafwiseCountingFunction::jumps({{0.5, 1.0}, {2.0, 0.5}, {7.0, 4.0}});
  CHECK(stieltjes_power_integral(pl, 3, -1.0) == 0.0);
  CHECK(stieltjes_power_integral(jl, 1, 0.4) == 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    for (int q : {1, 2, 5}) {
      CHECK(stieltjes_power_integral(pl, q, a) <= stieltjes_power_integral(pl, q, b));
      CHECK(stieltjes_power_integral(jl, q, a) <= stieltjes_power_integral(jl, q, b));
    }
  }
}

TEST_CASE("counting function validation") {
  CHECK_THROWS_AS(LeafwiseCountingFunction::power_law(-1.0, 0.5), ParameterError);
  CHECK_THROWS_AS(LeafwiseCountingFunction::power_law(1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(LeafwiseCountingFunction::jumps({{-1.0, 1.0}}), ParameterError);
  CHECK_THROWS_AS(LeafwiseCountingFunction::jumps({{1.0, 0.0}}), ParameterError);
  CHECK(LeafwiseCountingFunction::power_law(1.0, 0.5)(-2.0) == 0.0);
}
