#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "adialab/grid.hpp"
#include "adialab/quadrature.hpp"

namespace adialab::sol {

using IntMatrix2 = std::array<std::array<long, 2>, 2>;
using Vec2 = std::array<double, 2>;

/// Hyperbolic SL(2, Z) data of a Sol-manifold.
struct SolMatrixInfo {
  double expanding_eigenvalue;  ///< lambda_A = (|tr A| + sqrt(tr^2 A - 4)) / 2 > 1
  Vec2 expanding_direction;     ///< unit eigenvector for the eigenvalue of modulus lambda_A
  Vec2 contracting_direction;   ///< unit eigenvector for the eigenvalue of modulus 1 / lambda_A
  /// Whether (expanding, contracting), each normalized to a nonnegative first
  /// nonzero component, is a positively oriented basis.
  bool positively_oriented;
};

/// Requires det A = 1 and |tr A| > 2; throws ValidationError naming the
/// violated condition.
SolMatrixInfo sol_matrix_validate(const IntMatrix2& matrix);

/// Modified Mathieu operator -eps^2 d^2/dx^2 + a cosh(2 mu x) on the line.
struct MathieuModel {
  double a = 1.0;
  double mu = 1.0;
  double eps = 1.0;

  void validate() const;
};

inline constexpr double kTruncationTolerance = 1e-6;

/// Half-width with a cosh(2 mu L) = 10 lambda_max.
double mathieu_half_width(const MathieuModel& model, double lambda_max);

/// Dirichlet grid on [-L, L] with L = mathieu_half_width(model, lambda_max).
Discretization1D mathieu_discretization(const MathieuModel& model, double lambda_max, std::size_t n_points);

struct MathieuSpectrum {
  std::vector<double> eigenvalues;  ///< from the requested grid
  std::vector<double> extended;     ///< same spacing on a domain 1.25 times wider
  double max_rel_deviation;         ///< truncation certificate
};

/// k smallest eigenvalues on [-L, L] with Dirichlet ends, certified against a
/// run on [-1.25 L, 1.25 L] at the same spacing. Requires
/// a cosh(2 mu L) >= 10 lambda_max; throws TruncationError if the two runs
/// differ by more than kTruncationTolerance (relative).
MathieuSpectrum mathieu_eigs(const MathieuModel& model, const Discretization1D& disc, std::size_t k,
                             double lambda_max);

/// Area of {xi^2 + a cosh(2 mu x) <= lambda}; zero for lambda <= a.
double mathieu_phase_area(const MathieuModel& model, double lambda, const QuadratureSpec& spec = {});

struct MathieuWeylReport {
  std::size_t count;
  double prediction;  ///< area / (2 pi eps)
  double ratio;
  double max_rel_deviation;  ///< truncation certificate over the counted eigenvalues
};

/// #{eigenvalues <= lambda} against the phase-space prediction.
MathieuWeylReport mathieu_weyl_check(const MathieuModel& model, double lambda, const Discretization1D& disc,
                                     const QuadratureSpec& spec = {});

/// Leading counting law: lambda^{3/2} eps^{-2} / (4 pi^2) for alpha != 0,
/// lambda^{3/2} eps^{-2} / (6 pi^2) for alpha == 0 exactly.
double sol_counting_prediction(double alpha, double lambda, double eps);

/// beta = 2 alpha / (1 + alpha^2)
double deformation(double alpha);

/// (1/2) int beta eta / sinh(beta t eta) e^{-t eta^2} d eta; at alpha = 0 the
/// continuous extension sqrt(pi) / (2 t^{3/2}).
double sol_symbol_trace(double alpha, double t, const QuadratureSpec& spec = {});

/// Laplace transform of the alpha != 0 counting law:
/// (3 / (8 pi^2 eps^2)) Gamma(3/2) t^{-3/2}. Rejects alpha = 0.
double sol_actual_trace_prediction(double alpha, double t, double eps);

/// Laplace transform of the alpha = 0 counting law: sqrt(pi) / (8 pi^2) t^{-3/2} eps^{-2}.
double sol_riemannian_trace_prediction(double t, double eps);

/// Noncommutative Weyl prediction over the actual leading trace. Independent
/// of eps; tends to 2/3 as alpha -> 0 and stays below it.
double sol_mismatch_ratio(double alpha, double t, double eps, const QuadratureSpec& spec = {});

}  // namespace adialab::sol
