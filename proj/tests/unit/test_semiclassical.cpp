#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "adialab/errors.hpp"
#include "adialab/power_fit.hpp"
#include "adialab/semiclassical.hpp"
#include "adialab/torus.hpp"
#include "support.hpp"

using namespace adialab;
using namespace adialab::semiclassical;

namespace {

constexpr double kPi = std::numbers::pi;
const Potential flat = [](double) { return 0.0; };
const Potential cosine = [](double x) { return std::cos(2.0 * kPi * x); };

double theta_sum(double t) {
  double s = 1.0;
  for (int j = 1; j < 20; ++j) s += 2.0 * std::exp(-4.0 * kPi * kPi * j * j * t);
  return s;
}

}  // namespace

TEST_CASE("flat circle spectrum") {
  const auto eig = circle_schrodinger_eigs({flat, 1.0}, Discretization1D::periodic(1000), 3);
  REQUIRE(eig.size() == 3);
  CHECK(std::abs(eig[0]) < 1e-6);
  CHECK(testing::rel_err(eig[1], 4 * kPi * kPi) < 1e-3);
  CHECK(testing::rel_err(eig[2], 4 * kPi * kPi) < 1e-3);
}

TEST_CASE("constant potential shifts the spectrum") {
  const auto disc = Discretization1D::periodic(500);
  const auto base = circle_schrodinger_eigs({cosine, 0.2}, disc, 6);
  const auto shifted =
      circle_schrodinger_eigs({[](double x) { return std::cos(2.0 * kPi * x) + 3.25; }, 0.2}, disc, 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(shifted[i] - base[i] - 3.25) < 1e-10);
}

TEST_CASE("cosine potential: grid refinement and golden values") {
  const auto golden = testing::golden_list("circle_cos_h0.1_eigs");
  const CircleSchrodingerModel model{cosine, 0.1};
  const auto coarse = circle_schrodinger_eigs(model, Discretization1D::periodic(4000), 5);
  const auto fine = circle_schrodinger_eigs(model, Discretization1D::periodic(8000), 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(coarse[i] - fine[i]) <= 1e-6 * std::max(1.0, std::abs(fine[i])));
    CHECK(std::abs(fine[i] - golden[i]) <= 1e-6 * std::max(1.0, std::abs(golden[i])));
  }
}

TEST_CASE("circle_schrodinger_count counts eigenvalues <= lambda") {
  const CircleSchrodingerModel model{cosine, 0.1};
  const auto disc = Discretization1D::periodic(800);
  const auto eig = circle_schrodinger_eigs(model, disc, 40);
  for (double lambda : {-2.0, 0.0, 1.0, 2.5, 5.0}) {
    std::size_t expected = 0;
    for (double e : eig) expected += e <= lambda ? 1u : 0u;
    CHECK(circle_schrodinger_count(model, disc, lambda) == expected);
  }
}

TEST_CASE("phase-space area") {
  CHECK(weyl_phase_area_1d({flat, 1.0}, 4.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(weyl_phase_area_1d({cosine, 1.0}, -1.5) == 0.0);
  double prev = 0.0;
  for (double lambda = -1.0; lambda <= 3.0; lambda += 0.125) {
    const double a = weyl_phase_area_1d({cosine, 1.0}, lambda);
    CHECK(a >= prev);
    prev = a;
  }
}

TEST_CASE("phase-space area for V = cos agrees with a Monte Carlo estimate") {
  const double area = weyl_phase_area_1d({cosine, 1.0}, 2.0);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uxi(-std::sqrt(3.0), std::sqrt(3.0));
  const int samples = 2'000'000;
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const double x = ux(rng), xi = uxi(rng);
    hits += xi * xi + std::cos(2.0 * kPi * x) <= 2.0 ? 1 : 0;
  }
  const double mc = 2.0 * std::sqrt(3.0) * hits / samples;
  CHECK(testing::rel_err(area, mc) < 5e-3);
}

TEST_CASE("flat circle Weyl check") {
  const std::vector<double> hs{0.04, 0.02, 0.01};
  const auto rows = weyl_check_1d({flat, 1.0}, 1.0, Discretization1D::periodic(4000), hs);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    const auto exact = 1 + 2 * static_cast<std::size_t>(std::floor(1.0 / (2 * kPi * r.h)));
    CHECK(r.count == exact);
    CHECK(r.prediction == doctest::Approx(1.0 / (kPi * r.h)).epsilon(1e-12));
    CHECK(std::abs(r.ratio - 1.0) <= 3.0 / r.prediction);
  }
  CHECK(rows[2].count == 31);
  CHECK(std::abs(rows[2].ratio - 1.0) < 0.04);
}

TEST_CASE("cosine potential Weyl check converges") {
  // Above max V the spectrum comes in near-degenerate pairs, so the count
  // moves in steps of two and the ratio oscillates inside a 2 / prediction
  // envelope rather than improving at every h.
  const std::vector<double> hs{0.04, 0.02, 0.01, 0.005, 0.0025};
  const auto rows = weyl_check_1d({cosine, 1.0}, 2.0, Discretization1D::periodic(8000), hs);
  REQUIRE(rows.size() == hs.size());
  for (const auto& r : rows) CHECK(std::abs(static_cast<double>(r.count) - r.prediction) <= 2.0);
  CHECK(std::abs(rows[2].ratio - 1.0) < 0.03);
  CHECK(std::abs(rows[4].ratio - 1.0) < 0.005);
}

TEST_CASE("circle heat trace") {
  const auto disc = Discretization1D::periodic(2000);
  CHECK(std::abs(circle_heat_trace({flat, 1.0}, disc, 1.0) - theta_sum(1.0)) < 1e-8);
  const double base = circle_heat_trace({cosine, 0.3}, disc, 0.7);
  const double shifted = circle_heat_trace({[](double x) { return std::cos(2 * kPi * x) + 0.5; }, 0.3}, disc, 0.7);
  CHECK(shifted == doctest::Approx(std::exp(-0.35) * base).epsilon(1e-12));
  const auto eig = circle_heat_eigenvalues({cosine, 0.3}, disc, 0.7);
  double s = 0.0;
  for (double e : eig) s += std::exp(-0.7 * e);
  CHECK(s == doctest::Approx(base).epsilon(1e-12));
  CHECK_THROWS_AS(circle_heat_trace({flat, 0.001}, Discretization1D::periodic(20), 1e-3), TruncationError);
}

TEST_CASE("product model: trace factorizes") {
  const ProductSchrodingerModel model{cosine, [](double y) { return 0.5 * std::sin(2 * kPi * y); }, 0.2};
  const ProductGrid grid{400, 800};
  const double lhs = product_lhs_trace(model, 0.5, 1e-13, grid);
  const double x_factor = circle_heat_trace({model.v1, 1.0}, Discretization1D::periodic(grid.x_points), 0.5);
  const double y_factor = circle_heat_trace({model.v2, model.eps}, Discretization1D::periodic(grid.y_points), 0.5);
  CHECK(lhs == doctest::Approx(x_factor * y_factor).epsilon(1e-13));
}

TEST_CASE("product model with V = 0") {
  const ProductSchrodingerModel unit{flat, flat, 1.0};
  CHECK(std::abs(product_lhs_trace(unit, 1.0) - 1.0) < 1e-7);
  const double sym = operator_symbol_trace(unit, 1.0);
  CHECK(sym == doctest::Approx(std::sqrt(kPi) * theta_sum(1.0)).epsilon(1e-10));

  const ProductSchrodingerModel small{flat, flat, 0.1};
  const double lhs = product_lhs_trace(small, 1.0);
  const double rhs = nc_weyl_prediction(1, 0.1, operator_symbol_trace(small, 1.0));
  CHECK(std::abs(lhs / rhs - 1.0) < 0.02);

  const ProductSchrodingerModel tiny{flat, flat, 0.01};
  const double lhs2 = product_lhs_trace(tiny, 1.0);
  const double rhs2 = nc_weyl_prediction(1, 0.01, operator_symbol_trace(tiny, 1.0));
  CHECK(std::abs(lhs2 / rhs2 - 1.0) < 0.02);
}

TEST_CASE("product model: constant shifts and eps independence of the symbol trace") {
  const ProductSchrodingerModel base{cosine, flat, 0.1};
  const ProductSchrodingerModel shifted{[](double x) { return std::cos(2 * kPi * x) + 0.3; },
                                        [](double) { return 0.2; }, 0.1};
  CHECK(product_lhs_trace(shifted, 1.0) == doctest::Approx(std::exp(-0.5) * product_lhs_trace(base, 1.0)).epsilon(1e-10));
  CHECK(operator_symbol_trace(shifted, 1.0) ==
        doctest::Approx(std::exp(-0.5) * operator_symbol_trace(base, 1.0)).epsilon(1e-10));
  const ProductSchrodingerModel other_eps{cosine, flat, 0.03};
  CHECK(operator_symbol_trace(base, 1.0) == operator_symbol_trace(other_eps, 1.0));
}

TEST_CASE("product model: LHS follows the operator-valued Weyl law in eps") {
  std::vector<PowerLawSample> samples;
  for (double eps : {0.04, 0.02, 0.01})
    samples.push_back({eps, product_lhs_trace({flat, flat, eps}, 1.0)});
  const auto fit = fit_power_law(samples);
  CHECK(std::abs(fit.exponent - 1.0) < 0.05);
  const double c = operator_symbol_trace({flat, flat, 1.0}, 1.0) / (2 * kPi);
  CHECK(testing::rel_err(fit.coefficient, c) < 0.05);
}

TEST_CASE("leafwise evaluator") {
  const auto torus_leaf = LeafwiseCountingFunction::power_law(1.0 / kPi, 0.5);
  for (double lambda : {0.5, 10.0, 1e4}) {
    const double v = adiabatic_counting_from_leafwise(torus_leaf, 1, lambda);
    CHECK(std::abs(v - lambda / (4 * kPi)) <= 1e-12 * lambda / (4 * kPi));
  }
  CHECK(adiabatic_counting_from_leafwise(torus_leaf, 1, 10.0) == doctest::Approx(0.7957747).epsilon(1e-7));
  const auto atom = LeafwiseCountingFunction::jumps({{0.0, 1.0}});
  CHECK(adiabatic_counting_from_leafwise(atom, 2, 3.0) == doctest::Approx(3.0 / (4 * kPi)).epsilon(1e-14));
  CHECK(adiabatic_counting_from_leafwise(atom, 2, -1.0) == 0.0);
}

TEST_CASE("semiclassical parameter errors") {
  CHECK_THROWS_AS(circle_schrodinger_eigs({flat, 0.0}, Discretization1D::periodic(100), 2), ParameterError);
  CHECK_THROWS_AS(circle_schrodinger_eigs({flat, 1.0}, Discretization1D::dirichlet(1.0, 100), 2), ParameterError);
  CHECK_THROWS_AS(circle_heat_trace({flat, 1.0}, Discretization1D::periodic(100), -1.0), ParameterError);
  CHECK_THROWS_AS(product_lhs_trace({flat, flat, -0.1}, 1.0), ParameterError);
}
