#include "adialab/errors.hpp"

#include <cstdio>

namespace adialab {

namespace {

std::string with_estimates(const std::string& what, double previous, double last) {
  char buf[128];
  std::snprintf(buf, sizeof buf, " (last estimates %.17g, %.17g)", previous, last);
  return what + buf;
}

}  // namespace

ConvergenceError::ConvergenceError(const std::string& what, double previous, double last)
    : std::runtime_error(with_estimates(what, previous, last)), previous_(previous), last_(last) {}

}  // namespace adialab
