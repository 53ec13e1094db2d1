#include "adialab/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "adialab/eigensolvers.hpp"
#include "adialab/errors.hpp"
#include "adialab/summation.hpp"
#include "adialab/sublevel_area.hpp"

namespace adialab::semiclassical {

namespace {

struct PeriodicOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;
  double corner;
  double min_potential;
};

PeriodicOperator assemble(const CircleSchrodingerModel& model, const Discretization1D& disc) {
  disc.validate();
  if (disc.boundary != Boundary::periodic_unit_circle)
    throw ParameterError("circle Schrodinger operator needs a periodic-unit-circle grid");
  if (!model.potential) throw ParameterError("circle Schrodinger operator: potential not set");
  if (!(model.h > 0.0)) throw ParameterError("circle Schrodinger operator: h must be positive");
  const std::size_t n = disc.n_points;
  const double step = disc.spacing();
  const double coupling = -model.h * model.h / (step * step);
  PeriodicOperator op{std::vector<double>(n), std::vector<double>(n - 1, coupling), coupling,
                      std::numeric_limits<double>::infinity()};
  const auto x = disc.nodes();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = model.potential(x[i]);
    if (!std::isfinite(v)) throw ParameterError("circle Schrodinger operator: potential is not finite");
    op.diag[i] = -2.0 * coupling + v;
    op.min_potential = std::min(op.min_potential, v);
  }
  return op;
}

// Smallest eigenvalue count I such that, with the lower bound
// lambda_i >= min V + 16 h^2 ceil(i/2)^2 valid for the periodic three-point
// Laplacian, sum_{i >= I} e^{-t lambda_i} <= tol.
std::size_t eigenvalues_needed(double h, double t, double min_potential, double tol, std::size_t n) {
  const double a = 16.0 * h * h * t;
  const double prefactor = 2.0 * std::exp(-t * min_potential);
  for (std::size_t m = 1; 2 * m <= n + 1; ++m) {
    const double md = static_cast<double>(m);
    const double bound = prefactor * std::exp(-a * md * md) / (-std::expm1(-a * (2.0 * md + 1.0)));
    if (bound <= tol) return std::min(2 * m, n);
  }
  throw TruncationError("circle heat trace: grid of " + std::to_string(n) +
                        " points cannot resolve enough eigenvalues for the requested tail");
}

}  // namespace

std::vector<double> circle_schrodinger_eigs(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                            std::size_t k) {
  const auto op = assemble(model, disc);
  return periodic_tridiag_eigs(op.diag, op.offdiag, op.corner, k);
}

std::size_t circle_schrodinger_count(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                     double lambda) {
  const auto op = assemble(model, disc);
  const double shift = std::nextafter(lambda, std::numeric_limits<double>::infinity());
  return periodic_sturm_count(op.diag, op.offdiag, op.corner, shift);
}

double weyl_phase_area_1d(const CircleSchrodingerModel& model, double lambda, const QuadratureSpec& spec) {
  if (!model.potential) throw ParameterError("weyl_phase_area_1d: potential not set");
  return 2.0 * periodic_sqrt_integral(model.potential, lambda, spec);
}

std::vector<WeylCheckRow> weyl_check_1d(const CircleSchrodingerModel& model, double lambda,
                                        const Discretization1D& disc, std::span<const double> h_grid,
                                        const QuadratureSpec& spec) {
  const double area = weyl_phase_area_1d(model, lambda, spec);
  std::vector<WeylCheckRow> rows;
  rows.reserve(h_grid.size());
  for (double h : h_grid) {
    CircleSchrodingerModel scaled{model.potential, h};
    const std::size_t count = circle_schrodinger_count(scaled, disc, lambda);
    const double prediction = area / (2.0 * std::numbers::pi * h);
    const double ratio = prediction > 0.0 ? static_cast<double>(count) / prediction
                                          : std::numeric_limits<double>::quiet_NaN();
    rows.push_back({h, count, prediction, ratio});
  }
  return rows;
}

std::vector<double> circle_heat_eigenvalues(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                            double t, double rel_tail_tol) {
  if (!(t > 0.0)) throw ParameterError("circle heat trace: t must be positive");
  if (!(rel_tail_tol > 0.0)) throw ParameterError("circle heat trace: tail tolerance must be positive");
  const auto op = assemble(model, disc);
  const double ground = periodic_tridiag_eigs(op.diag, op.offdiag, op.corner, 1).front();
  // The sum is at least e^{-t ground}; ask for a tail below tol times that.
  const double tol = rel_tail_tol * std::exp(-t * (ground - op.min_potential));
  const std::size_t count = eigenvalues_needed(model.h, t, 0.0, tol, disc.n_points);
  return periodic_tridiag_eigs(op.diag, op.offdiag, op.corner, count);
}

double circle_heat_trace(const CircleSchrodingerModel& model, const Discretization1D& disc, double t,
                         double rel_tail_tol) {
  const auto eig = circle_heat_eigenvalues(model, disc, t, rel_tail_tol);
  std::vector<double> terms(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i) terms[i] = std::exp(-t * eig[i]);
  return pairwise_sum(terms);
}

double product_lhs_trace(const ProductSchrodingerModel& model, double t, double rel_tail_tol,
                         const ProductGrid& grid) {
  if (!(model.eps > 0.0)) throw ParameterError("product model: eps must be positive");
  const double x_trace =
      circle_heat_trace({model.v1, 1.0}, Discretization1D::periodic(grid.x_points), t, rel_tail_tol);
  const double y_trace =
      circle_heat_trace({model.v2, model.eps}, Discretization1D::periodic(grid.y_points), t, rel_tail_tol);
  return x_trace * y_trace;
}

double operator_symbol_trace(const ProductSchrodingerModel& model, double t, const QuadratureSpec& spec,
                             const ProductGrid& grid) {
  if (!(t > 0.0)) throw ParameterError("operator_symbol_trace: t must be positive");
  if (!model.v2) throw ParameterError("operator_symbol_trace: potential V2 not set");
  const double x_trace = circle_heat_trace({model.v1, 1.0}, Discretization1D::periodic(grid.x_points), t);
  const double momentum = integrate_line([t](double eta) { return std::exp(-t * eta * eta); }, t, spec);
  const double position =
      integrate_interval([&](double y) { return std::exp(-t * model.v2(y)); }, 0.0, 1.0, spec);
  return x_trace * momentum * position;
}

double adiabatic_counting_from_leafwise(const LeafwiseCountingFunction& counting, int q, double lambda) {
  if (q < 1) throw ParameterError("adiabatic_counting_from_leafwise: q must be a positive integer");
  const double half_q = 0.5 * q;
  const double prefactor = std::pow(4.0 * std::numbers::pi, -half_q) / std::tgamma(half_q + 1.0);
  return prefactor * stieltjes_power_integral(counting, q, lambda);
}

}  // namespace adialab::semiclassical
