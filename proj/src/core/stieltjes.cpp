#include "adialab/stieltjes.hpp"

#include <algorithm>
#include <cmath>

#include "adialab/errors.hpp"

namespace adialab {

LeafwiseCountingFunction LeafwiseCountingFunction::power_law(double coefficient, double power) {
  if (!(coefficient >= 0.0) || !std::isfinite(coefficient))
    throw ParameterError("power-law counting function: coefficient must be finite and >= 0");
  if (!(power > 0.0) || !std::isfinite(power))
    throw ParameterError("power-law counting function: power must be positive");
  return LeafwiseCountingFunction(PowerLaw{coefficient, power});
}

LeafwiseCountingFunction LeafwiseCountingFunction::jumps(std::vector<Jump> list) {
  for (const Jump& j : list) {
    if (!(j.location >= 0.0) || !std::isfinite(j.location))
      throw ParameterError("jump counting function: jump locations must be finite and >= 0");
    if (!(j.height > 0.0) || !std::isfinite(j.height))
      throw ParameterError("jump counting function: jump heights must be positive");
  }
  std::stable_sort(list.begin(), list.end(),
                   [](const Jump& a, const Jump& b) { return a.location < b.location; });
  return LeafwiseCountingFunction(std::move(list));
}

double LeafwiseCountingFunction::operator()(double tau) const {
  if (tau < 0.0) return 0.0;
  if (const auto* p = std::get_if<PowerLaw>(&rep_)) return p->coefficient * std::pow(tau, p->power);
  double total = 0.0;
  for (const Jump& j : std::get<std::vector<Jump>>(rep_)) {
    if (j.location > tau) break;
    total += j.height;
  }
  return total;
}

double stieltjes_power_integral(const LeafwiseCountingFunction& counting, int q, double lambda) {
  if (q < 1) throw ParameterError("stieltjes_power_integral: q must be a positive integer");
  if (lambda < 0.0) return 0.0;
  const double half_q = 0.5 * q;
  const auto& rep = counting.representation();
  if (const auto* p = std::get_if<LeafwiseCountingFunction::PowerLaw>(&rep)) {
    // c s int_0^lambda (lambda - tau)^{q/2} tau^{s-1} dtau
    //   = c lambda^{q/2+s} Gamma(s+1) Gamma(q/2+1) / Gamma(s+q/2+1)
    if (lambda == 0.0) return 0.0;
    const double log_beta =
        std::lgamma(p->power + 1.0) + std::lgamma(half_q + 1.0) - std::lgamma(p->power + half_q + 1.0);
    return p->coefficient * std::exp((half_q + p->power) * std::log(lambda) + log_beta);
  }
  double total = 0.0;
  for (const auto& j : std::get<std::vector<LeafwiseCountingFunction::Jump>>(rep)) {
    if (j.location > lambda) break;
    total += j.height * std::pow(lambda - j.location, half_q);
  }
  return total;
}

}  // namespace adialab
