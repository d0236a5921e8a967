#pragma once

#include <complex>
#include <cstddef>

#include "fpa/errors.hpp"

namespace fpa {

struct MlConfig {
  double rel_tol = 1e-16;
  std::size_t max_terms = 500;
};

/// Largest |z| accepted by the series evaluators. Beyond this the Taylor
/// series loses too much to cancellation and growth; a ConvergenceError is
/// raised instead.
inline constexpr double kMlWorkingRadius = 30.0;

/// E_beta(z) = sum z^n / Gamma(beta n + 1), 0 < beta <= 1.
///
/// Terms are formed in log space and summed in long double with Neumaier
/// compensation. When the largest term times the working epsilon is not small
/// against the result, the sum is redone in MPFR at 50, 100, 200, 400 and 800
/// decimal digits until it is. beta == 1 uses exp directly.
Complex ml_eval(double beta, Complex z, const MlConfig& cfg = {});

/// k-th derivative of E_beta at z.
Complex ml_derivative(double beta, unsigned k, Complex z, const MlConfig& cfg = {});

namespace detail {

/// exp(log_prefactor) * sum_{m>=0} C(k+m, k) z^m / Gamma(beta (k+m) + 1).
///
/// E^(k)(z) is the case log_prefactor = lgamma(k+1); the fractional Poisson
/// pmf is log_prefactor = k log(lambda), z = -lambda. `floor` is the additive
/// term in the stopping rule |t_m| < rel_tol (|sum| + floor).
struct ShiftedSeries {
  double beta = 1.0;
  unsigned k = 0;
  Complex z{0.0, 0.0};
  long double log_prefactor = 0.0L;
  double floor = 1.0;
};

struct SeriesOutcome {
  std::complex<long double> value;
  std::size_t terms = 0;
  /// 0 for long double, otherwise the MPFR digit count that was accepted.
  unsigned digits = 0;
};

SeriesOutcome shifted_series(const ShiftedSeries& s, const MlConfig& cfg);

}  // namespace detail

}  // namespace fpa
