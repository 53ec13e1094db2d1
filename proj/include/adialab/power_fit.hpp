#pragma once

#include <cstddef>
#include <span>

namespace adialab {

struct PowerLawSample {
  double eps;
  double value;
};

/// value ~ coefficient * eps^(-exponent), fitted by unweighted least squares
/// in log-log space. `residual` is the RMS deviation of log(value).
struct AsymptoticFit {
  double coefficient;
  double exponent;
  double residual;
  std::size_t n_points;
};

AsymptoticFit fit_power_law(std::span<const PowerLawSample> samples);

}  // namespace adialab
