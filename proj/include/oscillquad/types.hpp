#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscillquad {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Raised when an LU factorization meets a pivot below its singularity
/// tolerance. `pivot()` is the zero-based elimination step.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, std::size_t pivot)
      : std::runtime_error(what), pivot_(pivot) {}
  [[nodiscard]] std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

/// The fast solver cannot handle this configuration (e.g. nu <= d). Callers
/// may retry with the dense reference solver.
class UnsupportedRegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Phase functions with a stationary point in [-1, 1].
class UnsupportedOscillatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator of the weight system vanishes inside [-1, 1].
class PoleInIntervalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neither the fast path nor the dense reference could solve the collocation
/// system.
class UnsolvableProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscillquad
