#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fpa {

using Complex = std::complex<double>;

/// Invalid parameters or mismatched inputs.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (e.g. Wick log of
/// an expansion with nonpositive expectation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A truncated series or tail sum could not be certified. Carries the last
/// partial sum so callers can inspect how far the summation got.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Complex partial_sum)
      : std::runtime_error(what), partial_sum_(partial_sum) {}

  Complex partial_sum() const noexcept { return partial_sum_; }

 private:
  Complex partial_sum_;
};

}  // namespace fpa
