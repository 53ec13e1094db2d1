#include "adialab/power_fit.hpp"

#include <cmath>
#include <vector>

#include "adialab/errors.hpp"

namespace adialab {

AsymptoticFit fit_power_law(std::span<const PowerLawSample> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw ParameterError("fit_power_law: need at least 2 samples");
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].eps > 0.0)) throw ParameterError("fit_power_law: eps must be positive");
    if (!(samples[i].value > 0.0)) throw ParameterError("fit_power_law: values must be positive");
    xs[i] = std::log(samples[i].eps);
    ys[i] = std::log(samples[i].value);
    for (std::size_t j = 0; j < i; ++j)
      if (samples[j].eps == samples[i].eps) throw ParameterError("fit_power_law: eps values must be distinct");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  return {std::exp(intercept), -slope, std::sqrt(ss / static_cast<double>(n)), n};
}

}  // namespace adialab
