#include "fpa/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mp_tiers.hpp"

namespace fpa {

namespace {

struct Neumaier {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + comp; }
};

template <class Real>
struct Plain {
  Real sum = 0;
  void add(const Real& x) { sum += x; }
  Real value() const { return sum; }
};

template <class Real>
using Accumulator = std::conditional_t<std::is_same_v<Real, long double>, Neumaier, Plain<Real>>;

template <class Real>
struct Partial {
  Real re = 0;
  Real im = 0;
  Real max_abs = 0;
  std::size_t terms = 0;
  bool converged = false;
};

template <class Real>
Partial<Real> sum_shifted(const detail::ShiftedSeries& s, const MlConfig& cfg) {
  using std::exp;
  using std::log;
  using std::sqrt;
  const Real zr = s.z.real();
  const Real zi = s.z.imag();
  const Real r = sqrt(zr * zr + zi * zi);
  const Real ur = zr / r;
  const Real ui = zi / r;
  const Real log_r = log(r);
  const Real beta = s.beta;
  const Real k = s.k;
  const Real log_pref = s.log_prefactor;
  const Real tol = cfg.rel_tol;
  const Real floor = s.floor;

  Partial<Real> out;
  Accumulator<Real> acc_re;
  Accumulator<Real> acc_im;
  Real log_binom = 0;
  Real pr = 1;
  Real pi = 0;
  Real prev_log = 0;
  int small_run = 0;
  for (std::size_t m = 0; m < cfg.max_terms; ++m) {
    const Real mm = static_cast<Real>(m);
    if (m > 0) {
      log_binom += log(k + mm) - log(mm);
      const Real nr = pr * ur - pi * ui;
      pi = pr * ui + pi * ur;
      pr = nr;
    }
    const Real l = log_pref + log_binom + mm * log_r - detail::log_gamma(Real(beta * (k + mm) + 1));
    const Real mag = exp(l);
    acc_re.add(mag * pr);
    acc_im.add(mag * pi);
    if (mag > out.max_abs) out.max_abs = mag;
    out.terms = m + 1;

    const bool decreasing = m > 0 && l < prev_log;
    prev_log = l;
    const Real sr = acc_re.value();
    const Real si = acc_im.value();
    const Real abs_sum = sqrt(sr * sr + si * si);
    if (decreasing && mag < tol * (abs_sum + floor)) {
      if (++small_run >= 2) {
        out.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  out.re = acc_re.value();
  out.im = acc_im.value();
  return out;
}

template <class Real>
bool reliable(const Partial<Real>& p, const Real& eps) {
  using std::sqrt;
  const Real abs_sum = sqrt(p.re * p.re + p.im * p.im);
  const Real noise = p.max_abs * eps * (4 + sqrt(static_cast<Real>(p.terms)));
  return noise <= Real(1e-15) * abs_sum;
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ArgumentError("beta must lie in (0, 1], got " + std::to_string(beta));
  }
}

void check_radius(Complex z) {
  if (std::abs(z) > kMlWorkingRadius) {
    throw ConvergenceError("|z| = " + std::to_string(std::abs(z)) +
                               " exceeds the Mittag-Leffler working radius " +
                               std::to_string(kMlWorkingRadius),
                           Complex{std::numeric_limits<double>::quiet_NaN(), 0.0});
  }
}

[[noreturn]] void fail_terms(const MlConfig& cfg, Complex partial) {
  throw ConvergenceError(
      "Mittag-Leffler series did not meet the stopping rule within " + std::to_string(cfg.max_terms) +
          " terms",
      partial);
}

}  // namespace

namespace detail {

SeriesOutcome shifted_series(const ShiftedSeries& s, const MlConfig& cfg) {
  check_beta(s.beta);
  if (cfg.rel_tol <= 0.0 || cfg.max_terms < 1) {
    throw ArgumentError("MlConfig needs rel_tol > 0 and max_terms >= 1");
  }
  if (s.z == Complex{0.0, 0.0}) {
    const long double v =
        std::exp(s.log_prefactor - log_gamma(static_cast<long double>(s.beta) * s.k + 1));
    return {std::complex<long double>{v, 0.0L}, 1, 0};
  }

  const auto ld = sum_shifted<long double>(s, cfg);
  const Complex ld_value{static_cast<double>(ld.re), static_cast<double>(ld.im)};
  if (!ld.converged) fail_terms(cfg, ld_value);
  if (reliable(ld, std::numeric_limits<long double>::epsilon())) {
    return {std::complex<long double>{ld.re, ld.im}, ld.terms, 0};
  }

  // Each tier retries the whole sum at higher precision.
  SeriesOutcome outcome{};
  for (unsigned tier = 0; tier < kTierCount; ++tier) {
    const bool done = with_tier(tier, [&]<unsigned D>() {
      using R = MpReal<D>;
      const auto p = sum_shifted<R>(s, cfg);
      outcome.value = {static_cast<long double>(p.re), static_cast<long double>(p.im)};
      outcome.terms = p.terms;
      outcome.digits = D;
      if (!p.converged) {
        fail_terms(cfg, Complex{static_cast<double>(p.re), static_cast<double>(p.im)});
      }
      return reliable(p, R(std::numeric_limits<R>::epsilon()));
    });
    if (done) return outcome;
  }
  throw ConvergenceError("Mittag-Leffler series: cancellation exceeds 800 digits",
                         Complex{static_cast<double>(outcome.value.real()),
                                 static_cast<double>(outcome.value.imag())});
}

}  // namespace detail

Complex ml_eval(double beta, Complex z, const MlConfig& cfg) {
  return ml_derivative(beta, 0, z, cfg);
}

Complex ml_derivative(double beta, unsigned k, Complex z, const MlConfig& cfg) {
  check_beta(beta);
  check_radius(z);
  if (beta == 1.0) return std::exp(z);
  detail::ShiftedSeries s;
  s.beta = beta;
  s.k = k;
  s.z = z;
  s.log_prefactor = detail::log_gamma(static_cast<long double>(k) + 1);
  s.floor = 1.0;
  const auto v = detail::shifted_series(s, cfg).value;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace fpa
