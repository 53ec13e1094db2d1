#include "adialab/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "adialab/errors.hpp"
#include "adialab/special.hpp"

namespace adialab::heisenberg {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ParameterError(std::string(what) + " must be positive");
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

double mehler_kernel(const MehlerParams& params, double x, double y) {
  require_positive(params.t, "Mehler kernel: t");
  const double t = params.t;
  const double z = 2.0 * params.omega * t;
  // exponent = -[z coth z (x^2 + y^2) - 2 x y z / sinh z] / (4t), in a form
  // that stays finite for large |z|.
  const double ratio = x_over_sinh(z);
  const double exponent = -(x_coth(z) * (x * x + y * y) - 2.0 * x * y * ratio) / (4.0 * t);
  return std::exp(0.5 * log_x_over_sinh(z) + exponent) / std::sqrt(4.0 * std::numbers::pi * t);
}

OscillatorTrace oscillator_heat_trace(const MehlerParams& params) {
  require_positive(params.t, "oscillator trace: t");
  if (params.omega == 0.0) throw ParameterError("oscillator trace diverges at omega = 0");
  const double rate = std::abs(params.omega) * params.t;
  const double ratio = std::exp(-2.0 * rate);
  double term = std::exp(-rate);
  double sum = 0.0;
  std::size_t n = 0;
  for (; n < 100'000'000; ++n) {
    sum += term;
    term *= ratio;
    if (term / (1.0 - ratio) < 1e-14) break;
  }
  return {sum, n + 1};
}

double diagonal_kernel(double t, double p2, double p3) {
  require_positive(t, "diagonal kernel: t");
  const double x = p3 * t;
  // tanh(p3 t) / p3 = t * tanh(x) / x
  const double log_value = 0.5 * log_x_over_sinh(2.0 * x) - p3 * p3 * t - t * tanh_over_x(x) * p2 * p2;
  return std::exp(log_value) / std::sqrt(4.0 * std::numbers::pi * t);
}

double symbol_trace_2d(double t, const QuadratureSpec& spec) {
  require_positive(t, "symbol trace: t");
  // Outer variable p3, inner p2; the p2 decay rate is tanh(p3 t) / p3.
  return integrate_plane([t](double p3, double p2) { return diagonal_kernel(t, p2, p3); }, t,
                         [t](double p3) { return t * tanh_over_x(p3 * t); }, spec);
}

double symbol_trace_reduced(double t, const QuadratureSpec& spec) {
  require_positive(t, "symbol trace: t");
  // p / sinh(p t) = x_over_sinh(p t) / t
  const double integral =
      integrate_line([t](double p) { return x_over_sinh(p * t) / t * std::exp(-p * p * t); }, t, spec);
  return 0.5 * integral;
}

double heat_trace_leading(double t, double eps, const QuadratureSpec& spec) {
  require_positive(t, "heat trace: t");
  require_positive(eps, "heat trace: eps");
  const double integral =
      integrate_line([t](double eta) { return x_over_sinh(t * eta) / t * std::exp(-t * eta * eta); }, t, spec);
  return integral / (8.0 * std::numbers::pi * std::numbers::pi * eps * eps);
}

ConsistencyReport consistency_report(double t, double eps, const QuadratureSpec& spec) {
  ConsistencyReport r{};
  r.trace_2d = symbol_trace_2d(t, spec);
  r.trace_reduced = symbol_trace_reduced(t, spec);
  const double scale = 2.0 * std::numbers::pi * eps;
  r.rescaled_leading = heat_trace_leading(t, eps, spec) * scale * scale;
  r.max_rel_discrepancy = std::max({rel_diff(r.trace_2d, r.trace_reduced), rel_diff(r.trace_2d, r.rescaled_leading),
                                    rel_diff(r.trace_reduced, r.rescaled_leading)});
  r.passed = r.max_rel_discrepancy <= kConsistencyTolerance;
  return r;
}

}  // namespace adialab::heisenberg
