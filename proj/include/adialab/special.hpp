#pragma once

namespace adialab {

/// x / sinh(x), continuous at 0 (series for |x| < 1e-4), underflows to 0 for large |x|.
double x_over_sinh(double x);

/// tanh(x) / x, continuous at 0.
double tanh_over_x(double x);

/// log(x / sinh(x)) without overflow for large |x|.
double log_x_over_sinh(double x);

/// x * coth(x), continuous at 0.
double x_coth(double x);

}  // namespace adialab
