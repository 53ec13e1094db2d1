#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "adialab/grid.hpp"
#include "adialab/quadrature.hpp"
#include "adialab/stieltjes.hpp"

namespace adialab::semiclassical {

/// Continuous, 1-periodic potential on the unit circle.
using Potential = std::function<double(double)>;

/// -h^2 d^2/dx^2 + V(x) on the circle of circumference 1.
struct CircleSchrodingerModel {
  Potential potential;
  double h = 1.0;
};

/// Delta_X + eps^2 Delta_Y + V1(x) + V2(y) on the unit 2-torus.
struct ProductSchrodingerModel {
  Potential v1;
  Potential v2;
  double eps = 1.0;
};

/// Grid sizes for the product model's two circle factors.
struct ProductGrid {
  std::size_t x_points = 1000;
  std::size_t y_points = 2000;
};

/// k smallest eigenvalues of the periodic three-point discretization.
std::vector<double> circle_schrodinger_eigs(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                            std::size_t k);

/// Number of eigenvalues <= lambda of the periodic discretization.
std::size_t circle_schrodinger_count(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                     double lambda);

/// Area of {(x, xi) : xi^2 + V(x) <= lambda} over the unit circle.
double weyl_phase_area_1d(const CircleSchrodingerModel& model, double lambda, const QuadratureSpec& spec = {});

struct WeylCheckRow {
  double h;
  std::size_t count;
  double prediction;
  double ratio;
};

/// For each h: #{eigenvalues <= lambda} against area / (2 pi h).
std::vector<WeylCheckRow> weyl_check_1d(const CircleSchrodingerModel& model, double lambda,
                                        const Discretization1D& disc, std::span<const double> h_grid,
                                        const QuadratureSpec& spec = {});

/// tr exp(-t H) for the discretized circle operator. The eigenvalue sum is cut
/// once the Weyl-monotone lower bound on the remaining eigenvalues guarantees
/// a tail below rel_tail_tol times the partial sum.
double circle_heat_trace(const CircleSchrodingerModel& model, const Discretization1D& disc, double t,
                         double rel_tail_tol = 1e-13);

/// Sorted eigenvalues retained by circle_heat_trace for the same arguments.
std::vector<double> circle_heat_eigenvalues(const CircleSchrodingerModel& model, const Discretization1D& disc,
                                            double t, double rel_tail_tol = 1e-13);

/// tr exp(-t H_eps) = (sum_j e^{-t mu_j}) (sum_m e^{-t nu_m}), with mu_j from
/// -d^2/dx^2 + V1 and nu_m from -eps^2 d^2/dy^2 + V2.
double product_lhs_trace(const ProductSchrodingerModel& model, double t, double rel_tail_tol = 1e-13,
                         const ProductGrid& grid = {});

/// Integral over T*Y of tr exp(-t sigma(H_eps)(y, eta)); independent of eps.
/// The operator-valued Weyl prediction is this value divided by 2 pi eps.
double operator_symbol_trace(const ProductSchrodingerModel& model, double t, const QuadratureSpec& spec = {},
                             const ProductGrid& grid = {});

/// Leading term of eps^q N_eps(lambda) for a Riemannian foliation with leafwise
/// counting function N_F:
///   (4 pi)^{-q/2} / Gamma(q/2 + 1) * int (lambda - tau)^{q/2} dN_F(tau).
double adiabatic_counting_from_leafwise(const LeafwiseCountingFunction& counting, int q, double lambda);

}  // namespace adialab::semiclassical
