#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

// Thrown when a polynomial is evaluated outside its domain (z = 0 for Laurent forms).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Internal bookkeeping disagreed with itself (e.g. a root set of the wrong size).
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An iterative numerical method failed to reach its tolerance.
class NumericFailure : public std::runtime_error {
public:
  NumericFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

} // namespace bernstein
