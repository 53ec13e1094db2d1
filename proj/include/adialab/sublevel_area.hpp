#pragma once

#include <functional>

#include "adialab/quadrature.hpp"

namespace adialab {

/// Integral of sqrt(g) over [lo, hi] where g vanishes at both ends (simple
/// turning points) and is positive inside. The substitution
/// x = mid + half * sin(theta) removes the square-root endpoint behaviour.
double sqrt_integral_between_roots(const std::function<double(double)>& g, double lo, double hi,
                                   const QuadratureSpec& spec = {});

/// Integral over one period [0, 1) of max(0, lambda - V(x))^{1/2} for a
/// continuous 1-periodic V. Turning points are located by sampling and
/// bisection; each allowed interval is integrated with the sine substitution.
double periodic_sqrt_integral(const std::function<double(double)>& potential, double lambda,
                              const QuadratureSpec& spec = {});

}  // namespace adialab
