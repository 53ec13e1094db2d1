#include "adialab/grid.hpp"

#include "adialab/errors.hpp"

namespace adialab {

Discretization1D Discretization1D::periodic(std::size_t n) {
  Discretization1D d{1.0, n, Boundary::periodic_unit_circle};
  d.validate();
  return d;
}

Discretization1D Discretization1D::dirichlet(double half_width, std::size_t n) {
  Discretization1D d{half_width, n, Boundary::dirichlet_truncated};
  d.validate();
  return d;
}

void Discretization1D::validate() const {
  if (n_points < 3) throw ParameterError("Discretization1D: need at least 3 points");
  if (boundary == Boundary::dirichlet_truncated && !(half_width > 0.0))
    throw ParameterError("Discretization1D: half_width must be positive");
}

double Discretization1D::spacing() const {
  if (boundary == Boundary::periodic_unit_circle) return 1.0 / static_cast<double>(n_points);
  return 2.0 * half_width / static_cast<double>(n_points + 1);
}

std::vector<double> Discretization1D::nodes() const {
  std::vector<double> x(n_points);
  const double h = spacing();
  const double start = boundary == Boundary::periodic_unit_circle ? 0.0 : -half_width + h;
  for (std::size_t i = 0; i < n_points; ++i) x[i] = start + h * static_cast<double>(i);
  return x;
}

}  // namespace adialab
