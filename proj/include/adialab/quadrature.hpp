#pragma once

#include <functional>

namespace adialab {

using Integrand = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Tolerances and truncation policy for integrals with Gaussian-decay weights.
///
/// An integral over the real line whose integrand is bounded by a multiple of
/// exp(-t x^2) is truncated to [-R, R]. The default policy picks the smallest R
/// with exp(-t R^2) < abs_tol / 10, but never less than 8 / sqrt(t).
struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_refinements = 18;
  /// Optional override of the truncation rule: decay rate t -> cutoff R.
  std::function<double(double)> truncation_radius;

  void validate() const;
  double radius_for(double decay_rate) const;
};

/// Integral over [lo, hi] by composite 10-point Gauss-Legendre panels,
/// doubling the panel count until two successive estimates agree to
/// max(abs_tol, rel_tol * |estimate|).
double integrate_interval(const Integrand& f, double lo, double hi, const QuadratureSpec& spec = {});

/// Integral over the real line of an integrand with envelope exp(-t x^2).
/// Removable singularities must already be patched by the caller.
double integrate_line(const Integrand& f, double decay_rate, const QuadratureSpec& spec = {});

/// Iterated integral of f(x, y) over the plane, inner variable y. Both axes
/// are truncated with the same decay rate.
double integrate_plane(const Integrand2D& f, double decay_rate, const QuadratureSpec& spec = {});

/// As above, with the inner (y) truncation driven by a decay rate that may
/// depend on the outer variable x.
double integrate_plane(const Integrand2D& f, double outer_decay_rate,
                       const std::function<double(double)>& inner_decay_rate,
                       const QuadratureSpec& spec = {});

}  // namespace adialab
