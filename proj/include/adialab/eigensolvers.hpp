#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adialab {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Number of eigenvalues strictly below `shift` of the symmetric tridiagonal
/// matrix (diag, offdiag), from the signs of the LDL^T pivots (Sturm sequence).
std::size_t sturm_count(std::span<const double> diag, std::span<const double> offdiag, double shift);

/// Same for the cyclic tridiagonal matrix that additionally couples the first
/// and last unknowns with `corner`. Requires n >= 3.
std::size_t periodic_sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                                 double corner, double shift);

/// k smallest eigenvalues, ascending with multiplicity, by bisection on the
/// Sturm count. Throws ParameterError unless 1 <= k <= n and
/// offdiag.size() == n - 1.
std::vector<double> sym_tridiag_eigs(std::span<const double> diag, std::span<const double> offdiag,
                                     std::size_t k);

/// k smallest eigenvalues of the cyclic tridiagonal matrix (periodic
/// three-point stencils). offdiag[i] couples i and i+1 for i < n-1.
std::vector<double> periodic_tridiag_eigs(std::span<const double> diag, std::span<const double> offdiag,
                                          double corner, std::size_t k);

enum class DenseMethod {
  automatic,              ///< Jacobi up to kJacobiMaxSize, Householder + bisection above
  jacobi,                 ///< cyclic Jacobi rotations
  householder_bisection,  ///< reduction to tridiagonal form, then sym_tridiag_eigs
};

inline constexpr std::size_t kJacobiMaxSize = 96;
inline constexpr std::size_t kDenseMaxSize = 4000;

/// k smallest eigenvalues of a dense symmetric matrix (n <= 4000). Throws
/// ParameterError if the input deviates from symmetry by more than 1e-12
/// relative to its largest entry.
std::vector<double> dense_sym_eigs(const SymmetricMatrix& matrix, std::size_t k,
                                   DenseMethod method = DenseMethod::automatic);

}  // namespace adialab
