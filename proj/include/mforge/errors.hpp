#pragma once

#include <stdexcept>
#include <string>

namespace mforge {

/// Invalid configuration (segment capacity, worker count, policy parameters).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the range covered by a table or series.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Exact integer arithmetic would exceed its checked width.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, long long n)
      : std::overflow_error(what + " at n=" + std::to_string(n)), n_(n) {}
  long long n() const noexcept { return n_; }

 private:
  long long n_;
};

/// Dirichlet inversion requested for f(1) = 0, or f(1) not a unit.
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Standardization of a sample with zero variance.
class DegenerateSampleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mforge
