#include "fpa/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "fpa/combinatorics.hpp"
#include "fpa/kernels.hpp"
#include "mp_tiers.hpp"

namespace fpa {

FpmParams::FpmParams(double lambda, double beta) : lambda_(lambda), beta_(beta) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ArgumentError("lambda must be positive and finite, got " + std::to_string(lambda));
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ArgumentError("beta must lie in (0, 1], got " + std::to_string(beta));
  }
}

long double pmf_extended(const FpmParams& params, unsigned k) {
  const long double lambda = params.lambda();
  if (params.beta() == 1.0) {
    return std::exp(k * std::log(lambda) - detail::log_gamma(k + 1.0L) - lambda);
  }
  detail::ShiftedSeries s;
  s.beta = params.beta();
  s.k = k;
  s.z = Complex{-params.lambda(), 0.0};
  s.log_prefactor = k * std::log(lambda);
  s.floor = 0.0;
  return detail::shifted_series(s, kMeasureMl).value.real();
}

double pmf(const FpmParams& params, unsigned k) {
  return static_cast<double>(pmf_extended(params, k));
}

Complex laplace_transform(const FpmParams& params, Complex z, const MlConfig& cfg) {
  return ml_eval(params.beta(), params.lambda() * (std::exp(z) - 1.0), cfg);
}

double tilde_moment(const FpmParams& params, unsigned m) {
  if (m == 0) return 1.0;
  const long double l = detail::log_gamma(m + 1.0L) + m * std::log(static_cast<long double>(params.lambda())) -
                        detail::log_gamma(static_cast<long double>(params.beta()) * m + 1);
  return static_cast<double>(std::exp(l));
}

double moment(const FpmParams& params, unsigned n) {
  if (n == 0) return 1.0;
  const auto table = shared_stirling(n);
  double sum = 0.0;
  for (unsigned m = 1; m <= n; ++m) sum += tilde_moment(params, m) * table->second_value(n, m);
  return sum;
}

double moment_oracle(const FpmParams& params, unsigned n, double tail_tol) {
  if (!(tail_tol > 0.0)) throw ArgumentError("moment_oracle: tail_tol must be positive");
  auto weight = [n](unsigned k) {
    detail::Weight w;
    w.factor = std::pow(static_cast<long double>(k), static_cast<int>(n));
    return w;
  };
  return detail::certified_pmf_sum(params, weight, tail_tol).value.real();
}

double exp_moment(const FpmParams& params, double eps, double tail_tol) {
  if (!(eps >= 0.0)) throw ArgumentError("exp_moment: eps must be nonnegative");
  if (!(tail_tol > 0.0)) throw ArgumentError("exp_moment: tail_tol must be positive");
  auto weight = [eps](unsigned k) {
    detail::Weight w;
    w.log_scale = static_cast<long double>(eps) * k;
    return w;
  };
  return detail::certified_pmf_sum(params, weight, tail_tol).value.real();
}

MomentCache::MomentCache(const FpmParams& params, unsigned n_max) : params_(params) {
  const Real log_lambda = log(Real(params.lambda()));
  const Real beta = params.beta();
  for (unsigned m = 0; m <= n_max; ++m) {
    tilde_real_.push_back(m == 0 ? Real(1) : exp(lgamma(Real(m + 1)) + m * log_lambda - lgamma(beta * m + 1)));
  }
  const auto table = shared_stirling(n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    Real sum = n == 0 ? Real(1) : Real(0);
    for (unsigned m = 1; m <= n; ++m) sum += tilde_real_[m] * table->second_real(n, m);
    moments_real_.push_back(sum);
  }
  for (const auto& v : moments_real_) moments_.push_back(static_cast<double>(v));
  for (const auto& v : tilde_real_) tilde_.push_back(static_cast<double>(v));
}

double MomentCache::moment(unsigned n) const {
  if (n >= moments_.size()) {
    throw ArgumentError("MomentCache: moment " + std::to_string(n) + " requested, cache holds up to " +
                        std::to_string(n_max()));
  }
  return moments_[n];
}

double MomentCache::tilde(unsigned m) const {
  if (m >= tilde_.size()) {
    throw ArgumentError("MomentCache: tilde moment " + std::to_string(m) + " requested, cache holds up to " +
                        std::to_string(n_max()));
  }
  return tilde_[m];
}

namespace detail {

namespace {

// pmf values are pure functions of (lambda, beta); keep the longest table
// computed so far for each parameter pair.
std::shared_ptr<const std::vector<long double>> cached_pmf(const FpmParams& params, unsigned k_end) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, std::shared_ptr<const std::vector<long double>>> cache;
  const auto key = std::make_pair(params.lambda(), params.beta());
  std::shared_ptr<const std::vector<long double>> have;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) have = it->second;
  }
  if (have && have->size() >= k_end) return have;
  auto grown = std::make_shared<std::vector<long double>>(have ? *have : std::vector<long double>{});
  const unsigned from = static_cast<unsigned>(grown->size());
  auto more = pmf_block(params, from, k_end);
  grown->insert(grown->end(), more.begin(), more.end());
  std::lock_guard lock(mutex);
  if (cache.size() > 64) cache.clear();
  auto& slot = cache[key];
  if (!slot || slot->size() < grown->size()) slot = grown;
  return slot;
}

}  // namespace

TailSum certified_pmf_sum(const FpmParams& params, const std::function<Weight(unsigned)>& weight,
                          double tail_tol, unsigned k_limit) {
  std::shared_ptr<const std::vector<long double>> table;
  std::complex<long double> sum{0.0L, 0.0L};
  long double prev_abs = -1.0L;
  int good_run = 0;
  for (unsigned k = 0; k < k_limit; ++k) {
    if (!table || k >= table->size()) {
      table = cached_pmf(params, std::min<unsigned>(k_limit, std::max<unsigned>(64, 2 * k)));
    }
    const long double p = (*table)[k];
    std::complex<long double> t{0.0L, 0.0L};
    long double t_abs = 0.0L;
    if (p > 0.0L) {
      const Weight w = weight(k);
      const long double scale = std::exp(w.log_scale + std::log(p));
      t = w.factor * scale;
      t_abs = std::abs(t);
    }
    sum += t;

    const long double s_abs = std::abs(sum);
    const long double limit = tail_tol * std::max(1.0L, s_abs);
    bool good = false;
    double bound = 0.0;
    if (t_abs == 0.0L && p == 0.0L) {
      good = true;
    } else if (prev_abs > 0.0L && t_abs < prev_abs) {
      const long double r = t_abs / prev_abs;
      if (r < 0.99L) {
        const long double tail = t_abs * r / (1.0L - r);
        bound = static_cast<double>(tail);
        good = tail < limit;
      }
    }
    prev_abs = t_abs;
    good_run = good ? good_run + 1 : 0;
    if (good_run >= 4 && k >= 8) {
      return {Complex{static_cast<double>(sum.real()), static_cast<double>(sum.imag())}, k + 1, bound};
    }
  }
  throw ConvergenceError("pmf-weighted sum: tail not certified below k = " + std::to_string(k_limit),
                         Complex{static_cast<double>(sum.real()), static_cast<double>(sum.imag())});
}

}  // namespace detail

}  // namespace fpa
