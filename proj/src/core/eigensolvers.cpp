#include "adialab/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "adialab/errors.hpp"

namespace adialab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest admissible pivot magnitude; exact zeros are nudged to -tiny so the
// count stays well defined.
double pivot_floor(double scale) {
  return std::max(scale * kEps * kEps, std::numeric_limits<double>::min());
}

struct Bounds {
  double lo;
  double hi;
  double scale;
};

Bounds gershgorin(std::span<const double> diag, std::span<const double> offdiag, double corner) {
  const std::size_t n = diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(offdiag[i]);
    if (n > 1 && (i == 0 || i + 1 == n)) r += std::abs(corner);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
    scale = std::max(scale, std::abs(diag[i]) + r);
  }
  const double pad = 4.0 * kEps * std::max(scale, 1.0) + 1e-300;
  return {lo - pad, hi + pad, std::max(scale, std::numeric_limits<double>::min())};
}

// Locates the k smallest roots of a monotone counting function
// count(x) = #{eigenvalues < x}.
std::vector<double> bisect_smallest(const std::function<std::size_t(double)>& count, Bounds bounds,
                                    std::size_t k) {
  std::vector<double> out(k);
  const double abs_floor = bounds.scale * 1e-30;
  double lower = bounds.lo;
  for (std::size_t idx = 0; idx < k; ++idx) {
    double lo = lower;
    double hi = bounds.hi;
    for (int iter = 0; iter < 2000; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= std::max(2.0 * kEps * std::max(std::abs(lo), std::abs(hi)), abs_floor)) break;
      if (count(mid) > idx) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[idx] = 0.5 * (lo + hi);
    // Eigenvalue idx+1 is at least eigenvalue idx.
    lower = lo;
  }
  return out;
}

void check_shapes(std::span<const double> diag, std::span<const double> offdiag, std::size_t k) {
  const std::size_t n = diag.size();
  if (n == 0) throw ParameterError("eigensolver: empty matrix");
  if (offdiag.size() + 1 != n) throw ParameterError("eigensolver: offdiag must have length n-1");
  if (k < 1 || k > n) {
    throw ParameterError("eigensolver: requested " + std::to_string(k) + " eigenvalues of a " +
                         std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
}

std::vector<double> jacobi_eigs(const SymmetricMatrix& input) {
  const std::size_t n = input.size();
  SymmetricMatrix a = input;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
  const double threshold = kEps * kEps * total * 1e-2;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Householder reduction to tridiagonal form (eigenvalues only).
void tridiagonalize(SymmetricMatrix a, std::vector<double>& diag, std::vector<double>& offdiag) {
  const std::size_t n = a.size();
  diag.assign(n, 0.0);
  offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) {
      offdiag[k] = 0.0;
      continue;
    }
    if (a(k + 1, k) > 0.0) alpha = -alpha;
    // v = x - alpha e_1, normalized so that H = I - 2 v v^T / (v^T v).
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    const double beta = 2.0 / vnorm2;
    // w = beta A v ; w -= (beta/2)(v^T w) v
    double vw = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      w[i] = beta * s;
      vw += v[i] * w[i];
    }
    const double half = 0.5 * beta * vw;
    for (std::size_t i = k + 1; i < n; ++i) w[i] -= half * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= v[i] * w[j] + w[i] * v[j];
    offdiag[k] = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  if (n >= 2) offdiag[n - 2] = a(n - 1, n - 2);
}

}  // namespace

std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double shift) {
  const std::size_t n = diag.size();
  double scale = 0.0;
  for (double d : diag) scale = std::max(scale, std::abs(d));
  for (double e : offdiag) scale = std::max(scale, std::abs(e));
  const double tiny = pivot_floor(std::max(scale, std::abs(shift)));
  std::size_t negatives = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    pivot = diag[i] - shift - (i > 0 ? offdiag[i - 1] * offdiag[i - 1] / pivot : 0.0);
    if (std::abs(pivot) < tiny) pivot = tiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

std::size_t periodic_sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                                 double corner, double shift) {
  const std::size_t n = diag.size();
  if (n < 3) throw ParameterError("periodic_sturm_count: need at least 3 unknowns");
  double scale = std::abs(corner);
  for (double d : diag) scale = std::max(scale, std::abs(d));
  for (double e : offdiag) scale = std::max(scale, std::abs(e));
  const double tiny = pivot_floor(std::max(scale, std::abs(shift)));
  // LDL^T with the last unknown as a border: rows 0..n-2 form a tridiagonal
  // block, the border row couples to row 0 (corner) and row n-2 (offdiag).
  std::size_t negatives = 0;
  double pivot = 1.0;
  double border_l = 0.0;  // L(n-1, i-1)
  double schur = diag[n - 1] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double prev_off = i > 0 ? offdiag[i - 1] : 0.0;
    pivot = diag[i] - shift - (i > 0 ? prev_off * prev_off / pivot : 0.0);
    if (std::abs(pivot) < tiny) pivot = tiny;
    if (pivot < 0.0) ++negatives;
    double coupling = 0.0;
    if (i == 0) coupling += corner;
    if (i + 2 == n) coupling += offdiag[n - 2];
    const double w = coupling - border_l * prev_off;
    border_l = w / pivot;
    schur -= w * border_l;
  }
  if (std::abs(schur) < tiny) schur = tiny;
  if (schur < 0.0) ++negatives;
  return negatives;
}

std::vector<double> sym_tridiag_eigs(std::span<const double> diag, std::span<const double> offdiag,
                                     std::size_t k) {
  check_shapes(diag, offdiag, k);
  const Bounds bounds = gershgorin(diag, offdiag, 0.0);
  return bisect_smallest([&](double x) { return sturm_count(diag, offdiag, x); }, bounds, k);
}

std::vector<double> periodic_tridiag_eigs(std::span<const double> diag, std::span<const double> offdiag,
                                          double corner, std::size_t k) {
  check_shapes(diag, offdiag, k);
  if (diag.size() < 3) throw ParameterError("periodic_tridiag_eigs: need at least 3 unknowns");
  const Bounds bounds = gershgorin(diag, offdiag, corner);
  return bisect_smallest([&](double x) { return periodic_sturm_count(diag, offdiag, corner, x); },
                         bounds, k);
}

std::vector<double> dense_sym_eigs(const SymmetricMatrix& matrix, std::size_t k, DenseMethod method) {
  const std::size_t n = matrix.size();
  if (n == 0) throw ParameterError("dense_sym_eigs: empty matrix");
  if (n > kDenseMaxSize) throw ParameterError("dense_sym_eigs: matrix larger than 4000x4000");
  if (k < 1 || k > n) {
    throw ParameterError("dense_sym_eigs: requested " + std::to_string(k) + " eigenvalues of a " +
                         std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) largest = std::max(largest, std::abs(matrix(i, j)));
  const double sym_tol = 1e-12 * std::max(largest, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(matrix(i, j) - matrix(j, i)) > sym_tol)
        throw ParameterError("dense_sym_eigs: matrix is not symmetric at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");

  if (method == DenseMethod::automatic)
    method = n <= kJacobiMaxSize ? DenseMethod::jacobi : DenseMethod::householder_bisection;

  if (method == DenseMethod::jacobi) {
    auto eig = jacobi_eigs(matrix);
    eig.resize(k);
    return eig;
  }
  if (n == 1) return {matrix(0, 0)};
  std::vector<double> diag;
  std::vector<double> offdiag;
  tridiagonalize(matrix, diag, offdiag);
  return sym_tridiag_eigs(diag, offdiag, k);
}

}  // namespace adialab
