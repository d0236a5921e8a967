#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fpa/errors.hpp"
#include "fpa/mittag_leffler.hpp"
#include "fpa/precision.hpp"

namespace fpa {

/// Parameters (lambda, beta) of the fractional Poisson measure on N_0.
class FpmParams {
 public:
  FpmParams(double lambda, double beta);

  double lambda() const noexcept { return lambda_; }
  double beta() const noexcept { return beta_; }

  friend bool operator==(const FpmParams&, const FpmParams&) = default;

 private:
  double lambda_;
  double beta_;
};

/// Series settings used by the measure-level functions. Larger term budget
/// than the bare Mittag-Leffler default, since small beta needs long series.
inline constexpr MlConfig kMeasureMl{1e-16, 20000};

/// pi({k}) = lambda^k / k! * E_beta^(k)(-lambda).
double pmf(const FpmParams& params, unsigned k);

/// Same value in long double, for tails that underflow double.
long double pmf_extended(const FpmParams& params, unsigned k);

/// E_beta(lambda (e^z - 1)).
Complex laplace_transform(const FpmParams& params, Complex z, const MlConfig& cfg = kMeasureMl);

/// Closed form sum_m m! lambda^m / Gamma(m beta + 1) S(n, m).
double moment(const FpmParams& params, unsigned n);

/// sum_k k^n pmf(k), truncated once the geometric tail bound drops below
/// tail_tol * max(1, |partial sum|).
double moment_oracle(const FpmParams& params, unsigned n, double tail_tol = 1e-14);

/// m! lambda^m / Gamma(m beta + 1).
double tilde_moment(const FpmParams& params, unsigned m);

/// sum_k e^(eps k) pmf(k) with a certified tail.
double exp_moment(const FpmParams& params, double eps, double tail_tol = 1e-14);

/// Moments M(0..n_max) and M~(0..n_max), computed once at construction.
class MomentCache {
 public:
  MomentCache(const FpmParams& params, unsigned n_max);

  const FpmParams& params() const noexcept { return params_; }
  unsigned n_max() const noexcept { return static_cast<unsigned>(moments_.size() - 1); }

  double moment(unsigned n) const;
  double tilde(unsigned m) const;

  const std::vector<double>& moments() const noexcept { return moments_; }
  const std::vector<double>& tildes() const noexcept { return tilde_; }
  /// Quad-precision values, for polynomial identities that cancel heavily.
  const std::vector<Real>& moments_real() const noexcept { return moments_real_; }
  const std::vector<Real>& tildes_real() const noexcept { return tilde_real_; }

 private:
  FpmParams params_;
  std::vector<double> moments_;
  std::vector<double> tilde_;
  std::vector<Real> moments_real_;
  std::vector<Real> tilde_real_;
};

namespace detail {

/// Weight w(k) = exp(log_scale) * factor, kept apart so e^(zk) survives
/// past the double range.
struct Weight {
  long double log_scale = 0.0L;
  std::complex<long double> factor{1.0L, 0.0L};
};

struct TailSum {
  Complex value;
  unsigned terms = 0;
  double tail_bound = 0.0;
};

/// sum_k w(k) pmf(k). Stops after four consecutive decaying terms with ratio
/// r < 0.99 and geometric tail |t| r / (1 - r) < tail_tol * max(1, |sum|).
/// Throws ConvergenceError when no such point is found below k_limit.
TailSum certified_pmf_sum(const FpmParams& params, const std::function<Weight(unsigned)>& weight,
                          double tail_tol, unsigned k_limit = 4096);

}  // namespace detail

}  // namespace fpa
