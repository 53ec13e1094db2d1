#pragma once

#include <cstddef>

#include "adialab/quadrature.hpp"

namespace adialab::heisenberg {

/// Harmonic oscillator -d^2/dx^2 + omega^2 x^2 at time t.
struct MehlerParams {
  double omega = 1.0;
  double t = 1.0;
};

/// Heat kernel of the harmonic oscillator (Mehler's formula). At omega = 0
/// it reduces to the free kernel (4 pi t)^{-1/2} exp(-(x - y)^2 / 4t).
double mehler_kernel(const MehlerParams& params, double x, double y);

struct OscillatorTrace {
  double value;
  std::size_t terms;
};

/// sum_{n >= 0} e^{-(2n + 1)|omega| t}, stopped once the geometric tail is
/// below 1e-14. Equals 1 / (2 sinh(|omega| t)). omega = 0 is rejected.
OscillatorTrace oscillator_heat_trace(const MehlerParams& params);

/// Leafwise heat kernel of the symbol on the diagonal, as a function on the
/// conormal fibre (p2, p3):
///   (4 pi t)^{-1/2} (2 p3 t / sinh 2 p3 t)^{1/2} e^{-p3^2 t} exp(-tanh(p3 t) p2^2 / p3).
double diagonal_kernel(double t, double p2, double p3);

/// Foliation symbol trace as the double integral of diagonal_kernel.
double symbol_trace_2d(double t, const QuadratureSpec& spec = {});

/// Same trace after integrating out p2: (1/2) int p / sinh(p t) e^{-p^2 t} dp.
double symbol_trace_reduced(double t, const QuadratureSpec& spec = {});

/// Leading term of tr e^{-t Delta_eps} from the explicit heat kernel:
///   (8 pi^2 eps^2)^{-1} int eta / sinh(t eta) e^{-t eta^2} d eta.
double heat_trace_leading(double t, double eps, const QuadratureSpec& spec = {});

struct ConsistencyReport {
  double trace_2d;
  double trace_reduced;
  double rescaled_leading;  ///< (2 pi eps)^2 * heat_trace_leading
  double max_rel_discrepancy;
  bool passed;
};

inline constexpr double kConsistencyTolerance = 1e-7;

/// Compares the three routes to the symbol trace; passes when all pairwise
/// relative differences are within kConsistencyTolerance.
ConsistencyReport consistency_report(double t, double eps, const QuadratureSpec& spec = {});

}  // namespace adialab::heisenberg
