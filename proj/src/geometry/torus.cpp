#include "adialab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "adialab/errors.hpp"
#include "adialab/summation.hpp"

namespace adialab {

double nc_weyl_prediction(int q_codim, double eps, double symbol_trace) {
  if (q_codim < 1) throw ParameterError("nc_weyl_prediction: codimension must be a positive integer");
  if (!(eps > 0.0)) throw ParameterError("nc_weyl_prediction: eps must be positive");
  return symbol_trace / std::pow(2.0 * std::numbers::pi * eps, q_codim);
}

}  // namespace adialab

namespace adialab::torus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Quadratic form (k + a l)^2 + e^2 (l - a k)^2 = A k^2 + 2 B k l + C l^2.
struct EllipseRows {
  double a_coef;
  double b_coef;
  double c_coef;
  double det;  // A C - B^2 = eps^2 (1 + alpha^2)^2
  double rhs;  // lambda (1 + alpha^2) / (2 pi)^2
};

EllipseRows rows_for(const TorusFoliationParams& p, double lambda) {
  const double a = p.alpha;
  const double e2 = p.eps * p.eps;
  const double s = 1.0 + a * a;
  return {1.0 + e2 * a * a, a * (1.0 - e2), a * a + e2, e2 * s * s, lambda * s / (kTwoPi * kTwoPi)};
}

double lattice_bound(const TorusFoliationParams& p, double lambda) {
  if (lambda < 0.0) return 0.0;
  const double root = std::sqrt(lambda);
  const double semi_u = root / kTwoPi;
  const double semi_v = root / (kTwoPi * p.eps);
  return lambda / (4.0 * std::numbers::pi * p.eps) + 2.0 * (semi_u + semi_v) + 1.0;
}

void check_budget(const TorusFoliationParams& p, double lambda, std::uint64_t budget) {
  const double bound = lattice_bound(p, lambda);
  if (bound > static_cast<double>(budget)) {
    throw ResourceError("torus lattice enumeration: up to " + std::to_string(static_cast<long double>(bound)) +
                        " points exceeds the budget of " + std::to_string(budget));
  }
}

// Calls visit(k_lo, k_hi, l) for every lattice row meeting the sublevel set.
template <typename Visit>
void for_each_row(const TorusFoliationParams& p, double lambda, Visit&& visit) {
  if (lambda < 0.0) return;
  const EllipseRows q = rows_for(p, lambda);
  const long l_max = static_cast<long>(std::floor(std::sqrt(q.a_coef * q.rhs / q.det))) + 1;
  for (long l = -l_max; l <= l_max; ++l) {
    const double ld = static_cast<double>(l);
    const double disc = q.a_coef * q.rhs - ld * ld * q.det;
    const double center = -q.b_coef * ld / q.a_coef;
    const double half = disc > 0.0 ? std::sqrt(disc) / q.a_coef : 0.0;
    long k_lo = static_cast<long>(std::ceil(center - half));
    long k_hi = static_cast<long>(std::floor(center + half));
    // Settle the row ends with the exact eigenvalue test (ties included).
    while (torus_eigenvalue(k_lo - 1, l, p) <= lambda) --k_lo;
    while (k_lo <= k_hi && torus_eigenvalue(k_lo, l, p) > lambda) ++k_lo;
    while (torus_eigenvalue(k_hi + 1, l, p) <= lambda) ++k_hi;
    while (k_hi >= k_lo && torus_eigenvalue(k_hi, l, p) > lambda) --k_hi;
    if (k_hi >= k_lo) visit(k_lo, k_hi, l);
  }
}

}  // namespace

TorusFoliationParams TorusFoliationParams::irrational(double alpha, double eps) {
  TorusFoliationParams p{alpha, std::nullopt, eps};
  p.validate();
  return p;
}

TorusFoliationParams TorusFoliationParams::with_rational_slope(long p, long q, double eps) {
  TorusFoliationParams params{static_cast<double>(p) / static_cast<double>(q), RationalSlope{p, q}, eps};
  params.validate();
  return params;
}

void TorusFoliationParams::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("torus: eps must be positive");
  if (!std::isfinite(alpha)) throw ParameterError("torus: alpha must be finite");
  if (rational) {
    if (rational->q < 1) throw ParameterError("torus: rational slope denominator must be >= 1");
    if (std::gcd(std::abs(rational->p), rational->q) != 1)
      throw ParameterError("torus: rational slope p/q must be in lowest terms");
    if (alpha != static_cast<double>(rational->p) / static_cast<double>(rational->q))
      throw ParameterError("torus: alpha does not equal the declared rational slope");
  }
}

double torus_eigenvalue(long k, long l, const TorusFoliationParams& params) {
  const double kd = static_cast<double>(k);
  const double ld = static_cast<double>(l);
  const double a = params.alpha;
  const double along = kd + a * ld;
  const double across = ld - a * kd;
  return kTwoPi * kTwoPi * (along * along + params.eps * params.eps * across * across) / (1.0 + a * a);
}

std::uint64_t torus_counting(const TorusFoliationParams& params, double lambda, std::uint64_t budget) {
  params.validate();
  if (!std::isfinite(lambda)) throw ParameterError("torus_counting: lambda must be finite");
  check_budget(params, lambda, budget);
  std::uint64_t count = 0;
  for_each_row(params, lambda, [&](long k_lo, long k_hi, long) { count += static_cast<std::uint64_t>(k_hi - k_lo + 1); });
  return count;
}

double torus_counting_prediction(const TorusFoliationParams& params, double lambda) {
  params.validate();
  if (lambda <= 0.0) return 0.0;
  if (!params.rational) return lambda / (4.0 * std::numbers::pi * params.eps);
  const double p = static_cast<double>(params.rational->p);
  const double q = static_cast<double>(params.rational->q);
  const double norm2 = p * p + q * q;
  const double norm = std::sqrt(norm2);
  const double k_bound = std::sqrt(lambda) * norm / kTwoPi;
  const long k_max = static_cast<long>(std::ceil(k_bound)) - 1;
  std::vector<double> terms;
  for (long k = -k_max; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    if (!(std::abs(kd) < k_bound)) continue;
    const double inner = lambda - kTwoPi * kTwoPi * kd * kd / norm2;
    if (inner > 0.0) terms.push_back(std::sqrt(inner) / (std::numbers::pi * norm));
  }
  return pairwise_sum(terms) / params.eps;
}

std::vector<double> torus_eigenvalues_below(const TorusFoliationParams& params, double cutoff,
                                            std::uint64_t budget) {
  params.validate();
  check_budget(params, cutoff, budget);
  std::vector<double> values;
  for_each_row(params, cutoff, [&](long k_lo, long k_hi, long l) {
    for (long k = k_lo; k <= k_hi; ++k) values.push_back(torus_eigenvalue(k, l, params));
  });
  std::sort(values.begin(), values.end());
  return values;
}

double torus_heat_cutoff(const TorusFoliationParams& params, double t, double tail_tol) {
  params.validate();
  if (!(t > 0.0)) throw ParameterError("torus heat trace: t must be positive");
  if (!(tail_tol > 0.0)) throw ParameterError("torus heat trace: tail tolerance must be positive");
  const double c1 = 1.0 / (4.0 * std::numbers::pi * params.eps);
  const double c2 = (1.0 + 1.0 / params.eps) / std::numbers::pi;
  // sum_{lambda_kl > L} e^{-t lambda} <= int_L^inf t e^{-t x} N(x) dx with
  // N(x) <= c1 x + c2 sqrt(x) + 1.
  const auto bound = [&](double cut) {
    const double m = cut + 1.0 / t;
    return std::exp(-t * cut) * (c1 * m + c2 * m / std::sqrt(cut) + 1.0);
  };
  double hi = 1.0 / t;
  while (bound(hi) > tail_tol) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw TruncationError("torus heat trace: no admissible cutoff");
  }
  double lo = 0.5 * hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (bound(mid) > tail_tol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double torus_heat_trace(const TorusFoliationParams& params, double t, double tail_tol, std::uint64_t budget) {
  const double cutoff = torus_heat_cutoff(params, t, tail_tol);
  std::vector<double> eigenvalues;
  try {
    eigenvalues = torus_eigenvalues_below(params, cutoff, budget);
  } catch (const ResourceError& e) {
    throw TruncationError(std::string("torus heat trace: ") + e.what());
  }
  for (double& v : eigenvalues) v = std::exp(-t * v);
  return pairwise_sum(eigenvalues);
}

SymbolTraceRoutes torus_symbol_heat_trace(double t, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw ParameterError("torus_symbol_heat_trace: t must be positive");
  const double closed = 1.0 / (2.0 * t);
  // (u, v) ranges over the unit torus, so only the fibre variable remains.
  const double fibre = integrate_line([t](double p) { return std::exp(-t * p * p); }, t, spec);
  const double quad = fibre / std::sqrt(4.0 * std::numbers::pi * t);
  if (std::abs(quad - closed) > 1e-10 * closed)
    throw ConvergenceError("torus symbol trace: closed form and quadrature disagree", closed, quad);
  return {closed, quad};
}

}  // namespace adialab::torus
