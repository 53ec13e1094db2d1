#pragma once

#include <cstddef>
#include <vector>

namespace adialab {

enum class Boundary { dirichlet_truncated, periodic_unit_circle };

/// Grid for three-point finite differences in one dimension.
///
/// Dirichlet: n interior nodes on [-L, L], spacing 2L / (n + 1).
/// Periodic: n nodes on the unit circle, spacing 1 / n (half_width unused).
struct Discretization1D {
  double half_width = 1.0;
  std::size_t n_points = 1000;
  Boundary boundary = Boundary::periodic_unit_circle;

  static Discretization1D periodic(std::size_t n);
  static Discretization1D dirichlet(double half_width, std::size_t n);

  void validate() const;
  double spacing() const;
  std::vector<double> nodes() const;
};

}  // namespace adialab
