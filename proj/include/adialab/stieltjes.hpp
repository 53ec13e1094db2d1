#pragma once

#include <variant>
#include <vector>

namespace adialab {

/// Leafwise spectrum distribution function tau -> N_F(tau): nondecreasing,
/// right-continuous, zero for tau < 0. Either a power law c * tau^s or a
/// finite list of jumps.
class LeafwiseCountingFunction {
public:
  struct PowerLaw {
    double coefficient;
    double power;
  };
  struct Jump {
    double location;
    double height;
  };

  /// N_F(tau) = c * tau^s for tau >= 0; c >= 0, s > 0.
  static LeafwiseCountingFunction power_law(double coefficient, double power);
  /// Jumps at locations >= 0 with positive heights; sorted on construction.
  static LeafwiseCountingFunction jumps(std::vector<Jump> jumps);

  double operator()(double tau) const;

  const std::variant<PowerLaw, std::vector<Jump>>& representation() const noexcept { return rep_; }

private:
  explicit LeafwiseCountingFunction(std::variant<PowerLaw, std::vector<Jump>> rep) : rep_(std::move(rep)) {}

  std::variant<PowerLaw, std::vector<Jump>> rep_;
};

/// Integral over (-inf, lambda] of (lambda - tau)^(q/2) dN_F(tau). Closed form
/// through the Beta function for power laws, a weighted sum for jump lists.
double stieltjes_power_integral(const LeafwiseCountingFunction& counting, int q, double lambda);

}  // namespace adialab
