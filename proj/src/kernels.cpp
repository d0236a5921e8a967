#include "fpa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "fpa/appell_system.hpp"
#include "mp_tiers.hpp"

namespace fpa {

namespace {

struct BlockEntry {
  long double value = 0.0L;
  unsigned n_stop = 0;
  unsigned tier_start = 0;
  bool ran_out = false;
  bool reliable = false;
};

// Values feed long double tail sums, so aim at long double accuracy.
constexpr long double kStopTol = 1e-20L;
constexpr long double kReliableTol = 1e-18L;

BlockEntry sum_long_double(const std::vector<long double>& log_a, unsigned k) {
  BlockEntry e;
  long double sum = 0.0L;
  long double comp = 0.0L;
  long double max_abs = 0.0L;
  long double log_binom = 0.0L;
  long double prev = 0.0L;
  int small_run = 0;
  const unsigned n_end = static_cast<unsigned>(log_a.size());
  unsigned n = k;
  for (; n < n_end; ++n) {
    if (n > k) log_binom += std::log(static_cast<long double>(n)) - std::log(static_cast<long double>(n - k));
    const long double l = log_binom + log_a[n];
    const long double mag = std::exp(l);
    const long double t = ((n - k) % 2 == 0) ? mag : -mag;
    const long double s = sum + t;
    comp += std::fabs(sum) >= std::fabs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
    max_abs = std::max(max_abs, mag);
    const bool decreasing = n > k && l < prev;
    prev = l;
    if (decreasing && mag < kStopTol * std::fabs(sum + comp)) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  e.value = sum + comp;
  e.n_stop = n;
  e.ran_out = n >= n_end;
  const long double noise = max_abs * std::numeric_limits<long double>::epsilon() *
                            (4 + std::sqrt(static_cast<long double>(n - k + 1)));
  e.reliable = noise <= kReliableTol * std::fabs(e.value);
  return e;
}

template <class Real>
BlockEntry sum_tier(const std::vector<Real>& a, unsigned k) {
  BlockEntry e;
  Real sum = 0;
  Real max_abs = 0;
  Real binom = 1;
  Real prev = 0;
  int small_run = 0;
  const unsigned n_end = static_cast<unsigned>(a.size());
  unsigned n = k;
  for (; n < n_end; ++n) {
    if (n > k) binom = binom * n / (n - k);
    const Real mag = binom * a[n];
    if ((n - k) % 2 == 0) {
      sum += mag;
    } else {
      sum -= mag;
    }
    if (mag > max_abs) max_abs = mag;
    const bool decreasing = n > k && mag < prev;
    prev = mag;
    if (decreasing && mag < Real(kStopTol) * abs(sum)) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  e.value = static_cast<long double>(sum);
  e.n_stop = n;
  e.ran_out = n >= n_end;
  const Real noise = max_abs * std::numeric_limits<Real>::epsilon() * (4 + sqrt(Real(n - k + 1)));
  e.reliable = noise <= Real(kReliableTol) * abs(sum);
  return e;
}

void extend_log_a(const FpmParams& p, std::vector<long double>& table, unsigned n_end) {
  const long double log_lambda = std::log(static_cast<long double>(p.lambda()));
  for (unsigned n = static_cast<unsigned>(table.size()); n < n_end; ++n) {
    table.push_back(n * log_lambda - detail::log_gamma(static_cast<long double>(p.beta()) * n + 1));
  }
}

template <class Real>
void extend_a(const FpmParams& p, std::vector<Real>& table, unsigned n_end) {
  const unsigned from = static_cast<unsigned>(table.size());
  if (n_end <= from) return;
  table.resize(n_end);
  const Real log_lambda = log(Real(p.lambda()));
  const Real beta = p.beta();
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = from; i < static_cast<long>(n_end); ++i) {
    const unsigned n = static_cast<unsigned>(i);
    table[n] = exp(n * log_lambda - detail::log_gamma(Real(beta * n + 1)));
  }
}

constexpr unsigned kTableLimit = 1u << 16;

[[noreturn]] void table_exhausted(unsigned k) {
  throw ConvergenceError("pmf_block: series for k = " + std::to_string(k) + " did not settle within " +
                             std::to_string(kTableLimit) + " terms",
                         Complex{0.0, 0.0});
}

// Runs `sum` over `pending` in parallel, growing the table until every entry
// stops inside it.
template <class Table, class Extend, class Sum>
void run_pending(const std::vector<unsigned>& pending, std::vector<BlockEntry>& entries, unsigned k_begin,
                 Table& table, unsigned n_end, Extend extend, Sum sum) {
  std::vector<unsigned> todo = pending;
  n_end = std::max<unsigned>(n_end, static_cast<unsigned>(table.size()));
  while (!todo.empty()) {
    extend(table, n_end);
    const long count = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
      const unsigned k = todo[static_cast<std::size_t>(i)];
      entries[k - k_begin] = sum(table, k);
    }
    std::vector<unsigned> again;
    for (unsigned k : todo) {
      if (entries[k - k_begin].ran_out) again.push_back(k);
    }
    if (!again.empty()) {
      if (n_end >= kTableLimit) table_exhausted(again.front());
      n_end = std::min(kTableLimit, n_end * 2);
    }
    todo.swap(again);
  }
}

}  // namespace

std::vector<long double> pmf_block(const FpmParams& params, unsigned k_begin, unsigned k_end) {
  if (k_end < k_begin) throw ArgumentError("pmf_block: k_end precedes k_begin");
  if (k_end == k_begin) return {};
  const unsigned count = k_end - k_begin;
  std::vector<long double> out(count);
  if (params.beta() == 1.0) {
    const long double lambda = params.lambda();
    const long double log_lambda = std::log(lambda);
#pragma omp parallel for
    for (long i = 0; i < static_cast<long>(count); ++i) {
      const unsigned k = k_begin + static_cast<unsigned>(i);
      out[static_cast<std::size_t>(i)] = std::exp(k * log_lambda - detail::log_gamma(k + 1.0L) - lambda);
    }
    return out;
  }

  std::vector<BlockEntry> entries(count);
  std::vector<unsigned> pending(count);
  for (unsigned i = 0; i < count; ++i) pending[i] = k_begin + i;

  unsigned n_end = std::max(2 * k_end, k_end + 256);
  std::vector<long double> log_a;
  run_pending(
      pending, entries, k_begin, log_a, n_end,
      [&](std::vector<long double>& t, unsigned n) { extend_log_a(params, t, n); },
      [](const std::vector<long double>& t, unsigned k) { return sum_long_double(t, k); });

  std::vector<unsigned> unreliable;
  for (unsigned k : pending) {
    if (!entries[k - k_begin].reliable) unreliable.push_back(k);
  }
  if (unreliable.empty()) {
    for (unsigned i = 0; i < count; ++i) out[i] = entries[i].value;
    return out;
  }

  // The digits needed grow with k. Run the full ladder on every 16th
  // unreliable k, then start the others at the tier of the sample below.
  std::vector<unsigned> samples;
  std::vector<unsigned> rest;
  for (std::size_t i = 0; i < unreliable.size(); ++i) {
    (i % 16 == 0 || i + 1 == unreliable.size() ? samples : rest).push_back(unreliable[i]);
  }
  std::tuple<std::vector<detail::MpReal<50>>, std::vector<detail::MpReal<100>>,
             std::vector<detail::MpReal<200>>, std::vector<detail::MpReal<400>>,
             std::vector<detail::MpReal<800>>>
      tables;
  auto ladder = [&](const std::vector<unsigned>& ks) {
    for (unsigned tier = 0; tier < detail::kTierCount; ++tier) {
      std::vector<unsigned> now;
      unsigned n_needed = k_end + 64;
      for (unsigned k : ks) {
        const BlockEntry& e = entries[k - k_begin];
        if (!e.reliable && e.tier_start <= tier) {
          now.push_back(k);
          n_needed = std::max(n_needed, e.n_stop + 64);
        }
      }
      if (now.empty()) continue;
      detail::with_tier(tier, [&]<unsigned D>() {
        using R = detail::MpReal<D>;
        auto& table = std::get<std::vector<R>>(tables);
        run_pending(
            now, entries, k_begin, table, n_needed,
            [&](std::vector<R>& t, unsigned n) { extend_a<R>(params, t, n); },
            [tier](const std::vector<R>& t, unsigned k) {
              BlockEntry e = sum_tier<R>(t, k);
              e.tier_start = tier;
              return e;
            });
      });
    }
  };
  ladder(samples);
  std::size_t j = 0;
  for (unsigned k : rest) {
    while (j + 1 < samples.size() && samples[j + 1] < k) ++j;
    entries[k - k_begin].tier_start = entries[samples[j] - k_begin].tier_start;
  }
  ladder(rest);
  for (unsigned k : unreliable) {
    if (!entries[k - k_begin].reliable) {
      throw ConvergenceError("pmf_block: cancellation in the series for k = " + std::to_string(k) +
                                 " exceeds 800 digits",
                             Complex{static_cast<double>(entries[k - k_begin].value), 0.0});
    }
  }

  for (unsigned i = 0; i < count; ++i) out[i] = entries[i].value;
  return out;
}

std::vector<long double> pmf_block_serial(const FpmParams& params, unsigned k_begin, unsigned k_end) {
  if (k_end < k_begin) throw ArgumentError("pmf_block: k_end precedes k_begin");
  std::vector<long double> out;
  for (unsigned k = k_begin; k < k_end; ++k) out.push_back(pmf_extended(params, k));
  return out;
}

namespace {

Complex pairing(PairingRoute route, unsigned m, const Poly& p, const MomentCache& cache) {
  return route == PairingRoute::Difference ? q_action(m, p, cache) : q_action_stirling(m, p, cache);
}

double weighted_point(const TaylorSeries& u, unsigned l, double k, double r, int a) {
  const Complex z = std::polar(r, 2.0 * M_PI * a / kGridAngles);
  return std::abs(taylor_eval(u, z)) * std::exp(-std::ldexp(std::pow(r, k), -static_cast<int>(l)));
}

}  // namespace

std::vector<Complex> gram_matrix(const PolyFamily& family, const MomentCache& cache, PairingRoute route) {
  const unsigned n = family.n_max() + 1;
  std::vector<Complex> g(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic)
  for (long row = 0; row < static_cast<long>(n); ++row) {
    for (unsigned m = 0; m < n; ++m) {
      g[static_cast<std::size_t>(row) * n + m] = pairing(route, m, family[static_cast<unsigned>(row)], cache);
    }
  }
  return g;
}

std::vector<Complex> gram_matrix_serial(const PolyFamily& family, const MomentCache& cache, PairingRoute route) {
  const unsigned n = family.n_max() + 1;
  std::vector<Complex> g(static_cast<std::size_t>(n) * n);
  for (unsigned row = 0; row < n; ++row) {
    for (unsigned m = 0; m < n; ++m) g[static_cast<std::size_t>(row) * n + m] = pairing(route, m, family[row], cache);
  }
  return g;
}

std::vector<double> weighted_radial_max(const TaylorSeries& u, unsigned l, double k,
                                        const std::vector<double>& radii) {
  const long cells = static_cast<long>(radii.size()) * kGridAngles;
  std::vector<double> values(static_cast<std::size_t>(cells));
#pragma omp parallel for
  for (long c = 0; c < cells; ++c) {
    values[static_cast<std::size_t>(c)] =
        weighted_point(u, l, k, radii[static_cast<std::size_t>(c / kGridAngles)], static_cast<int>(c % kGridAngles));
  }
  std::vector<double> out(radii.size(), 0.0);
  for (long c = 0; c < cells; ++c) {
    auto& slot = out[static_cast<std::size_t>(c / kGridAngles)];
    slot = std::max(slot, values[static_cast<std::size_t>(c)]);
  }
  return out;
}

std::vector<double> weighted_radial_max_serial(const TaylorSeries& u, unsigned l, double k,
                                               const std::vector<double>& radii) {
  std::vector<double> out;
  for (double r : radii) {
    double best = 0.0;
    for (int a = 0; a < kGridAngles; ++a) best = std::max(best, weighted_point(u, l, k, r, a));
    out.push_back(best);
  }
  return out;
}

}  // namespace fpa
