#pragma once

#include <stdexcept>
#include <string>

namespace adialab {

/// Bad argument or violated precondition.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An adaptive scheme stopped refining before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double previous, double last);

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

private:
  double previous_;
  double last_;
};

/// A series or lattice sum could not be cut off below the requested tail.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The requested work exceeds a configured budget.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input data fails a structural condition (e.g. a Sol matrix that is not hyperbolic).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace adialab
