#include "fpa/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fpa/kernels.hpp"
#include "mp_tiers.hpp"

namespace fpa {

const char* to_string(NormStatus s) {
  switch (s) {
    case NormStatus::Ok: return "ok";
    case NormStatus::Overflow: return "overflow";
    case NormStatus::Divergent: return "divergent";
    case NormStatus::Untrusted: return "untrusted";
  }
  return "unknown";
}

namespace detail {

NormResult weighted_square_sum(const std::vector<Complex>& c, double factorial_power, double log2_step) {
  long double sum = 0.0L;
  long double prev = 0.0L;
  bool growing = false;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const long double a = std::abs(std::complex<long double>(c[n].real(), c[n].imag()));
    if (a == 0.0L) continue;
    const long double log_term = factorial_power * detail::log_gamma(static_cast<long double>(n) + 1) +
                                 n * log2_step * std::log(2.0L) + 2.0L * std::log(a);
    sum += std::exp(log_term);
    growing = prev > 0.0L && sum > kGrowthFactor * prev;
    prev = sum;
  }
  NormResult r;
  if (sum > kDivergenceLevel && growing) {
    r.status = NormStatus::Divergent;
    r.value = std::numeric_limits<double>::infinity();
  } else if (sum > std::numeric_limits<double>::max()) {
    r.status = NormStatus::Overflow;
    r.value = std::numeric_limits<double>::infinity();
  } else {
    r.value = static_cast<double>(sum);
  }
  return r;
}

}  // namespace detail

namespace {

NormResult root(NormResult r) {
  if (r.status == NormStatus::Ok) r.value = std::sqrt(r.value);
  return r;
}

void check_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ArgumentError("kappa must lie in [0, 1]");
}

}  // namespace

NormResult test_norm(const CExpansion& e, const NormParams& np) {
  if (np.sign != NormSign::Test) throw ArgumentError("test_norm needs NormParams with sign = test");
  check_kappa(np.kappa);
  return root(detail::weighted_square_sum(e.coeffs, 1.0 + np.kappa, np.q));
}

NormResult dist_norm(const QExpansion& q, const NormParams& np) {
  if (np.sign != NormSign::Distribution) {
    throw ArgumentError("dist_norm needs NormParams with sign = distribution");
  }
  check_kappa(np.kappa);
  return root(detail::weighted_square_sum(q.coeffs, 1.0 - np.kappa, -static_cast<double>(np.q)));
}

double hs_embedding_norm(unsigned p, unsigned q) {
  if (p <= q) {
    throw ArgumentError("hs_embedding_norm: embedding is Hilbert-Schmidt only for p > q (got p=" +
                        std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
  return 1.0 / (1.0 - std::ldexp(1.0, static_cast<int>(q) - static_cast<int>(p)));
}

NormResult entire_type_norm(const TaylorSeries& u, unsigned l, double k, const std::vector<double>& radius_grid) {
  if (!(k >= 1.0)) throw ArgumentError("entire_type_norm: growth order k must be >= 1");
  if (radius_grid.empty()) throw ArgumentError("entire_type_norm: empty radius grid");
  std::vector<double> radii = radius_grid;
  std::sort(radii.begin(), radii.end());
  if (radii.front() < 0.0) throw ArgumentError("entire_type_norm: radii must be nonnegative");

  const auto per_radius = weighted_radial_max(u, l, k, radii);
  NormResult r;
  r.value = *std::max_element(per_radius.begin(), per_radius.end());
  if (radii.size() >= 2) {
    const double outer = per_radius.back();
    const double inner = *std::max_element(per_radius.begin(), per_radius.end() - 1);
    if (outer > (1.0 + 1e-9) * inner && per_radius.back() > per_radius[per_radius.size() - 2]) {
      r.status = NormStatus::Divergent;
      r.value = std::numeric_limits<double>::infinity();
      return r;
    }
  }
  if (!std::isfinite(r.value)) {
    r.status = NormStatus::Overflow;
  } else if (radii.back() > u.trust_radius) {
    r.status = NormStatus::Untrusted;
  }
  return r;
}

NormResult seminorm_series(const TaylorSeries& u, unsigned q, double kappa, NormSign sign) {
  check_kappa(kappa);
  if (sign == NormSign::Test) return detail::weighted_square_sum(u.coeffs, 1.0 + kappa, q);
  return detail::weighted_square_sum(u.coeffs, 1.0 - kappa, -static_cast<double>(q));
}

}  // namespace fpa
