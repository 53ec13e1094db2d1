#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adialab/quadrature.hpp"

namespace adialab {

/// (2 pi eps)^{-q} times a foliation symbol trace: the noncommutative Weyl
/// prediction for tr f(Delta_eps) in codimension q.
double nc_weyl_prediction(int q_codim, double eps, double symbol_trace);

}  // namespace adialab

namespace adialab::torus {

struct RationalSlope {
  long p;
  long q;
};

/// Linear foliation of slope alpha on the unit 2-torus with adiabatic
/// parameter eps. The rational branch of the counting law is used only when
/// `rational` is given explicitly; alpha must then equal p/q.
struct TorusFoliationParams {
  double alpha = 0.0;
  std::optional<RationalSlope> rational;
  double eps = 1.0;

  static TorusFoliationParams irrational(double alpha, double eps);
  static TorusFoliationParams with_rational_slope(long p, long q, double eps);

  void validate() const;
};

inline constexpr std::uint64_t kDefaultLatticeBudget = 100'000'000;

/// (2 pi)^2 [(k + alpha l)^2 + eps^2 (l - alpha k)^2] / (1 + alpha^2)
double torus_eigenvalue(long k, long l, const TorusFoliationParams& params);

/// #{(k, l) in Z^2 : lambda_kl <= lambda}, by exact enumeration row by row.
/// Throws ResourceError if the lattice-point bound exceeds `budget`.
std::uint64_t torus_counting(const TorusFoliationParams& params, double lambda,
                             std::uint64_t budget = kDefaultLatticeBudget);

/// Leading-order counting law: lambda / (4 pi eps) for irrational slopes, the
/// finite sum over |k| < sqrt(lambda) sqrt(p^2 + q^2) / (2 pi) for p/q.
double torus_counting_prediction(const TorusFoliationParams& params, double lambda);

/// All eigenvalues <= cutoff with multiplicity, ascending.
std::vector<double> torus_eigenvalues_below(const TorusFoliationParams& params, double cutoff,
                                            std::uint64_t budget = kDefaultLatticeBudget);

/// Spectral cutoff beyond which sum e^{-t lambda_kl} is below tail_tol, from
/// the lattice-point bound #(ellipse) <= area + perimeter / 2 + 1.
double torus_heat_cutoff(const TorusFoliationParams& params, double t, double tail_tol);

/// sum over Z^2 of e^{-t lambda_kl}, truncated at torus_heat_cutoff.
double torus_heat_trace(const TorusFoliationParams& params, double t, double tail_tol = 1e-13,
                        std::uint64_t budget = kDefaultLatticeBudget);

struct SymbolTraceRoutes {
  double closed_form;  ///< 1 / (2t)
  double quadrature;   ///< (4 pi t)^{-1/2} * int exp(-t p^2) dp over T^2 x R
};

/// Foliation symbol trace of exp(-t sigma(Delta_eps)) for irrational slope.
/// Throws ConvergenceError if the two routes differ by more than 1e-10.
SymbolTraceRoutes torus_symbol_heat_trace(double t, const QuadratureSpec& spec = {});

}  // namespace adialab::torus
