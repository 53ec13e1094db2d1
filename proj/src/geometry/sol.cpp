#include "adialab/sol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "adialab/eigensolvers.hpp"
#include "adialab/errors.hpp"
#include "adialab/special.hpp"
#include "adialab/sublevel_area.hpp"
#include "adialab/torus.hpp"

namespace adialab::sol {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 eigenvector(const IntMatrix2& m, double value) {
  const double a = static_cast<double>(m[0][0]);
  const double b = static_cast<double>(m[0][1]);
  const double c = static_cast<double>(m[1][0]);
  const double d = static_cast<double>(m[1][1]);
  Vec2 v = b != 0.0 ? Vec2{b, value - a} : Vec2{value - d, c};
  const double norm = std::hypot(v[0], v[1]);
  v[0] /= norm;
  v[1] /= norm;
  const double lead = v[0] != 0.0 ? v[0] : v[1];
  if (lead < 0.0) {
    v[0] = -v[0];
    v[1] = -v[1];
  }
  return v;
}

struct MathieuOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

MathieuOperator assemble(const MathieuModel& model, const Discretization1D& disc) {
  const double step = disc.spacing();
  const double coupling = -model.eps * model.eps / (step * step);
  MathieuOperator op{std::vector<double>(disc.n_points), std::vector<double>(disc.n_points - 1, coupling)};
  const auto x = disc.nodes();
  for (std::size_t i = 0; i < x.size(); ++i) op.diag[i] = -2.0 * coupling + model.a * std::cosh(2.0 * model.mu * x[i]);
  return op;
}

void require_dirichlet(const Discretization1D& disc) {
  disc.validate();
  if (disc.boundary != Boundary::dirichlet_truncated)
    throw ParameterError("Mathieu operator needs a Dirichlet-truncated grid");
}

// Same spacing, about 1.25 times the half-width, nodes aligned with `disc`.
Discretization1D widened(const Discretization1D& disc) {
  const std::size_t cells = disc.n_points + 1;
  std::size_t wide_cells = static_cast<std::size_t>(std::llround(1.25 * static_cast<double>(cells)));
  if ((wide_cells - cells) % 2 != 0) ++wide_cells;
  const double step = disc.spacing();
  return Discretization1D::dirichlet(0.5 * step * static_cast<double>(wide_cells), wide_cells - 1);
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ParameterError(std::string(what) + " must be positive");
}

}  // namespace

SolMatrixInfo sol_matrix_validate(const IntMatrix2& m) {
  const long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const long trace = m[0][0] + m[1][1];
  if (det != 1) throw ValidationError("Sol matrix: determinant is " + std::to_string(det) + ", expected 1");
  if (std::abs(trace) <= 2)
    throw ValidationError("Sol matrix: |trace| = " + std::to_string(std::abs(trace)) + " must exceed 2");
  const double tr = static_cast<double>(trace);
  const double root = std::sqrt(tr * tr - 4.0);
  const double lambda = 0.5 * (std::abs(tr) + root);
  const double sign = trace > 0 ? 1.0 : -1.0;
  SolMatrixInfo info{};
  info.expanding_eigenvalue = lambda;
  info.expanding_direction = eigenvector(m, sign * lambda);
  info.contracting_direction = eigenvector(m, sign / lambda);
  const auto& u = info.expanding_direction;
  const auto& v = info.contracting_direction;
  info.positively_oriented = u[0] * v[1] - u[1] * v[0] > 0.0;
  return info;
}

void MathieuModel::validate() const {
  require_positive(a, "Mathieu model: a");
  require_positive(mu, "Mathieu model: mu");
  require_positive(eps, "Mathieu model: eps");
}

double mathieu_half_width(const MathieuModel& model, double lambda_max) {
  model.validate();
  require_positive(lambda_max, "Mathieu model: lambda_max");
  return std::acosh(std::max(10.0 * lambda_max / model.a, 1.0)) / (2.0 * model.mu);
}

Discretization1D mathieu_discretization(const MathieuModel& model, double lambda_max, std::size_t n_points) {
  return Discretization1D::dirichlet(mathieu_half_width(model, lambda_max), n_points);
}

MathieuSpectrum mathieu_eigs(const MathieuModel& model, const Discretization1D& disc, std::size_t k,
                             double lambda_max) {
  model.validate();
  require_dirichlet(disc);
  require_positive(lambda_max, "Mathieu model: lambda_max");
  const double wall = model.a * std::cosh(2.0 * model.mu * disc.half_width);
  if (wall < 10.0 * lambda_max * (1.0 - 1e-12))
    throw ParameterError("Mathieu grid too narrow: a cosh(2 mu L) must be at least 10 lambda_max");
  const auto op = assemble(model, disc);
  MathieuSpectrum out;
  out.eigenvalues = sym_tridiag_eigs(op.diag, op.offdiag, k);
  const auto wide = widened(disc);
  const auto wide_op = assemble(model, wide);
  out.extended = sym_tridiag_eigs(wide_op.diag, wide_op.offdiag, k);
  out.max_rel_deviation = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dev = std::abs(out.eigenvalues[i] - out.extended[i]) / std::abs(out.extended[i]);
    out.max_rel_deviation = std::max(out.max_rel_deviation, dev);
  }
  if (out.max_rel_deviation > kTruncationTolerance) {
    throw TruncationError("Mathieu eigenvalues depend on the truncation half-width (relative change " +
                          std::to_string(out.max_rel_deviation) + ")");
  }
  return out;
}

double mathieu_phase_area(const MathieuModel& model, double lambda, const QuadratureSpec& spec) {
  model.validate();
  if (lambda <= model.a) return 0.0;
  const double turning = std::acosh(lambda / model.a) / (2.0 * model.mu);
  const auto g = [&](double x) { return lambda - model.a * std::cosh(2.0 * model.mu * x); };
  return 2.0 * sqrt_integral_between_roots(g, -turning, turning, spec);
}

MathieuWeylReport mathieu_weyl_check(const MathieuModel& model, double lambda, const Discretization1D& disc,
                                     const QuadratureSpec& spec) {
  model.validate();
  require_dirichlet(disc);
  const auto op = assemble(model, disc);
  MathieuWeylReport r{};
  r.count = sturm_count(op.diag, op.offdiag, std::nextafter(lambda, std::numeric_limits<double>::infinity()));
  r.prediction = mathieu_phase_area(model, lambda, spec) / (2.0 * kPi * model.eps);
  r.ratio = r.prediction > 0.0 ? static_cast<double>(r.count) / r.prediction
                               : std::numeric_limits<double>::quiet_NaN();
  if (r.count > 0) r.max_rel_deviation = mathieu_eigs(model, disc, r.count, lambda).max_rel_deviation;
  return r;
}

double sol_counting_prediction(double alpha, double lambda, double eps) {
  if (!(lambda >= 0.0)) throw ParameterError("Sol counting law: lambda must be >= 0");
  require_positive(eps, "Sol counting law: eps");
  const double coefficient = alpha == 0.0 ? 1.0 / (6.0 * kPi * kPi) : 1.0 / (4.0 * kPi * kPi);
  return coefficient * std::pow(lambda, 1.5) / (eps * eps);
}

double deformation(double alpha) { return 2.0 * alpha / (1.0 + alpha * alpha); }

double sol_symbol_trace(double alpha, double t, const QuadratureSpec& spec) {
  require_positive(t, "Sol symbol trace: t");
  if (alpha == 0.0) return std::sqrt(kPi) / (2.0 * std::pow(t, 1.5));
  const double beta = deformation(alpha);
  // beta eta / sinh(beta t eta) = x_over_sinh(beta t eta) / t
  const double integral =
      integrate_line([=](double eta) { return x_over_sinh(beta * t * eta) / t * std::exp(-t * eta * eta); }, t, spec);
  return 0.5 * integral;
}

double sol_actual_trace_prediction(double alpha, double t, double eps) {
  if (alpha == 0.0)
    throw ParameterError("Sol trace law for alpha = 0 is the Riemannian branch; use sol_riemannian_trace_prediction");
  require_positive(t, "Sol trace law: t");
  require_positive(eps, "Sol trace law: eps");
  return 3.0 / (8.0 * kPi * kPi * eps * eps) * std::tgamma(1.5) / std::pow(t, 1.5);
}

double sol_riemannian_trace_prediction(double t, double eps) {
  require_positive(t, "Sol trace law: t");
  require_positive(eps, "Sol trace law: eps");
  return std::sqrt(kPi) / (8.0 * kPi * kPi) / std::pow(t, 1.5) / (eps * eps);
}

double sol_mismatch_ratio(double alpha, double t, double eps, const QuadratureSpec& spec) {
  if (alpha == 0.0) throw ParameterError("Sol mismatch ratio requires alpha != 0");
  return nc_weyl_prediction(2, eps, sol_symbol_trace(alpha, t, spec)) / sol_actual_trace_prediction(alpha, t, eps);
}

}  // namespace adialab::sol
