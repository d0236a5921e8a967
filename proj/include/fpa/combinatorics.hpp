#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "fpa/errors.hpp"
#include "fpa/precision.hpp"

namespace fpa {

using BigInt = boost::multiprecision::cpp_int;

/// Memoized table of signed Stirling numbers of the first kind s(n,k) and
/// Stirling numbers of the second kind S(n,k) for 0 <= k <= n <= n_max.
/// Immutable once built.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);

  unsigned n_max() const noexcept { return n_max_; }

  /// s(n,k); zero when k > n. Requires n <= n_max().
  const BigInt& first(unsigned n, unsigned k) const;
  /// S(n,k); zero when k > n. Requires n <= n_max().
  const BigInt& second(unsigned n, unsigned k) const;

  double first_value(unsigned n, unsigned k) const { return k > n ? 0.0 : first_values_[index(n, k)]; }
  double second_value(unsigned n, unsigned k) const { return k > n ? 0.0 : second_values_[index(n, k)]; }
  /// Quad-precision copies; exact while |value| < 2^113 (n <= 30 for s).
  const Real& first_real(unsigned n, unsigned k) const { return first_reals_[index(n, k)]; }
  const Real& second_real(unsigned n, unsigned k) const { return second_reals_[index(n, k)]; }

 private:
  std::size_t index(unsigned n, unsigned k) const;

  unsigned n_max_;
  std::vector<BigInt> first_;
  std::vector<BigInt> second_;
  std::vector<double> first_values_;
  std::vector<double> second_values_;
  std::vector<Real> first_reals_;
  std::vector<Real> second_reals_;
};

/// Process-wide table covering at least n_max rows. The returned table stays
/// valid for as long as the caller holds the pointer; safe from any thread.
std::shared_ptr<const StirlingTable> shared_stirling(unsigned n_max);

BigInt stirling_first(unsigned n, unsigned k);
BigInt stirling_second(unsigned n, unsigned k);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), evaluated by
/// enumerating every (j_1, ..., j_{n-k+1}) with sum j = k and sum i*j_i = n.
/// `args` must hold exactly max(n-k+1, 0) values (B_{0,0} also accepts none).
Complex bell_partial(unsigned n, unsigned k, std::span<const Complex> args);
Scalar bell_partial(unsigned n, unsigned k, std::span<const Scalar> args);

/// (y)_m = y (y-1) ... (y-m+1), with (y)_0 = 1.
Complex falling_factorial(Complex y, unsigned m);

/// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(unsigned n, unsigned k);

double factorial(unsigned n);

/// n! in quad precision (exact for n <= 30).
Real factorial_real(unsigned n);

}  // namespace fpa
