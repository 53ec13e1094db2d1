#include "adialab/special.hpp"

#include <cmath>

namespace adialab {

namespace {
constexpr double kSeriesCutoff = 1e-4;
}

double x_over_sinh(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesCutoff) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  if (ax > 700.0) return std::exp(log_x_over_sinh(x));
  return x / std::sinh(x);
}

double tanh_over_x(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
  }
  return std::tanh(x) / x;
}

double log_x_over_sinh(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesCutoff) return std::log(x_over_sinh(x));
  // sinh(a) = e^a (1 - e^{-2a}) / 2
  return std::log(2.0 * ax) - ax - std::log1p(-std::exp(-2.0 * ax));
}

double x_coth(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesCutoff) return 1.0 + x * x / 3.0;
  if (ax > 20.0) return ax * (1.0 + 2.0 * std::exp(-2.0 * ax));
  return x / std::tanh(x);
}

}  // namespace adialab
