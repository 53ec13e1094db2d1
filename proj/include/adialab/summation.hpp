#pragma once

#include <span>

namespace adialab {

/// Pairwise (cascade) summation. The association order depends only on the
/// length of the input, so results are reproducible bit for bit.
double pairwise_sum(std::span<const double> values);

}  // namespace adialab
