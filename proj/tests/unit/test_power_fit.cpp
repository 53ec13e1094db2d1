#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "adialab/errors.hpp"
#include "adialab/power_fit.hpp"

using namespace adialab;

TEST_CASE("fit_power_law: exact inputs") {
  const std::vector<PowerLawSample> quad{{0.1, 100.0}, {0.01, 10000.0}};
  const auto fit = fit_power_law(quad);
  CHECK(fit.coefficient == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.residual < 1e-12);
  CHECK(fit.n_points == 2);

  const std::vector<PowerLawSample> flat{{0.1, 5.0}, {0.01, 5.0}};
  const auto c = fit_power_law(flat);
  CHECK(c.coefficient == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(std::abs(c.exponent) < 1e-12);
  CHECK(c.residual < 1e-12);
}

TEST_CASE("fit_power_law recovers random exact power laws") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(0.01, 100.0), expo(-3.0, 3.0), eps(1e-4, 1.0);
  std::uniform_int_distribution<int> count(2, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const double c = coef(rng), g = expo(rng);
    std::vector<PowerLawSample> s;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const double e = eps(rng) * (1.0 + 1e-3 * i);
      s.push_back({e, c * std::pow(e, -g)});
    }
    const auto fit = fit_power_law(s);
    CHECK(fit.coefficient == doctest::Approx(c).epsilon(1e-9));
    CHECK(fit.exponent == doctest::Approx(g).epsilon(1e-9));
    CHECK(fit.residual < 1e-12);
  }
}

TEST_CASE("fit_power_law: residual reflects scatter") {
  const std::vector<PowerLawSample> s{{0.1, 10.0}, {0.05, 25.0}, {0.01, 90.0}};
  CHECK(fit_power_law(s).residual > 1e-3);
}

TEST_CASE("fit_power_law: parameter errors") {
  CHECK_THROWS_AS(fit_power_law(std::vector<PowerLawSample>{{0.1, 1.0}}), ParameterError);
  CHECK_THROWS_AS(fit_power_law(std::vector<PowerLawSample>{{0.1, 1.0}, {0.2, 0.0}}), ParameterError);
  CHECK_THROWS_AS(fit_power_law(std::vector<PowerLawSample>{{0.1, 1.0}, {0.1, 2.0}}), ParameterError);
  CHECK_THROWS_AS(fit_power_law(std::vector<PowerLawSample>{{-0.1, 1.0}, {0.1, 2.0}}), ParameterError);
}
