#include "adialab/sublevel_area.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "adialab/summation.hpp"

namespace adialab {

namespace {

constexpr std::size_t kSamples = 4096;

// Root of g in [a, b] with g(a) <= 0 < g(b) or g(a) > 0 >= g(b).
double bisect_root(const std::function<double(double)>& g, double a, double b) {
  const bool rising = g(a) <= 0.0;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    if ((g(m) <= 0.0) == rising) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double sqrt_integral_between_roots(const std::function<double(double)>& g, double lo, double hi,
                                   const QuadratureSpec& spec) {
  if (!(hi > lo)) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const auto mapped = [&](double theta) {
    const double x = mid + half * std::sin(theta);
    const double v = g(x);
    return v > 0.0 ? std::sqrt(v) * half * std::cos(theta) : 0.0;
  };
  return integrate_interval(mapped, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, spec);
}

double periodic_sqrt_integral(const std::function<double(double)>& potential, double lambda,
                              const QuadratureSpec& spec) {
  const auto g = [&](double x) { return lambda - potential(x); };
  std::vector<double> samples(kSamples);
  std::size_t negative_at = kSamples;
  bool any_positive = false;
  for (std::size_t j = 0; j < kSamples; ++j) {
    samples[j] = g(static_cast<double>(j) / kSamples);
    if (samples[j] <= 0.0 && negative_at == kSamples) negative_at = j;
    if (samples[j] > 0.0) any_positive = true;
  }
  if (!any_positive) return 0.0;
  if (negative_at == kSamples) {
    return integrate_interval([&](double x) { return std::sqrt(std::max(g(x), 0.0)); }, 0.0, 1.0, spec);
  }
  // Walk one full period starting from a forbidden sample so every allowed
  // run has both of its turning points inside the walk.
  const auto x_at = [&](std::size_t j) { return static_cast<double>(j) / kSamples; };
  const auto value_at = [&](std::size_t j) { return samples[j % kSamples]; };
  std::vector<double> pieces;
  std::size_t j = negative_at;
  const std::size_t end = negative_at + kSamples;
  while (j < end) {
    if (value_at(j) <= 0.0 && value_at(j + 1) > 0.0) {
      const double left = bisect_root(g, x_at(j), x_at(j + 1));
      std::size_t k = j + 1;
      while (value_at(k + 1) > 0.0) ++k;
      const double right = bisect_root(g, x_at(k), x_at(k + 1));
      pieces.push_back(sqrt_integral_between_roots(g, left, right, spec));
      j = k + 1;
    } else {
      ++j;
    }
  }
  return pairwise_sum(pieces);
}

}  // namespace adialab
