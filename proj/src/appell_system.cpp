#include "fpa/appell_system.hpp"

#include <string>

#include "fpa/combinatorics.hpp"

namespace fpa {

Scalar expectation_real(const Poly& p, const MomentCache& cache) {
  if (cache.n_max() < p.degree()) {
    throw ArgumentError("expectation: MomentCache holds moments up to " + std::to_string(cache.n_max()) +
                        ", polynomial has degree " + std::to_string(p.degree()));
  }
  Scalar acc(0);
  for (unsigned n = 0; n <= p.degree(); ++n) acc += p[n] * Scalar(cache.moments_real()[n]);
  return acc;
}

Complex expectation(const Poly& p, const MomentCache& cache) { return to_complex(expectation_real(p, cache)); }

Complex q_action(unsigned m, const Poly& p, const MomentCache& cache) {
  return expectation(difference(p, m), cache);
}

Complex q_action_stirling(unsigned m, const Poly& p, const MomentCache& cache) {
  return expectation(difference_stirling_series(p, m), cache);
}

Complex int_deriv_c(unsigned n, unsigned k, const PolyFamily& family, const MomentCache& cache) {
  return expectation(derivative(family[n], k), cache);
}

Complex dual_pair(const CExpansion& e, const QExpansion& q) {
  require_same_params(e.params, q.params, "dual_pair");
  const std::size_t len = std::min(e.coeffs.size(), q.coeffs.size());
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < len; ++k) acc += factorial(static_cast<unsigned>(k)) * e.coeffs[k] * q.coeffs[k];
  return acc;
}

QExpansion project_to_q(const Poly& p, const PolyFamily& family, const MomentCache& cache) {
  QExpansion out{family.params, {}};
  for (unsigned k = 0; k <= family.n_max(); ++k) {
    out.coeffs.push_back(to_complex(expectation_real(family[k] * p, cache) / Scalar(factorial_real(k))));
  }
  return out;
}

QExpansion delta_z(Complex z, const PolyFamily& family, unsigned n_max) {
  QExpansion out{family.params, {}};
  const Scalar zs = to_scalar(z);
  for (unsigned n = 0; n <= n_max; ++n) {
    out.coeffs.push_back(to_complex(poly_eval(family[n], zs) / Scalar(factorial_real(n))));
  }
  return out;
}

QExpansion rho(Complex shift, const FpmParams& params, unsigned n_max) {
  QExpansion out{params, {}};
  for (unsigned k = 0; k <= n_max; ++k) out.coeffs.push_back(falling_factorial(shift, k) / factorial(k));
  return out;
}

}  // namespace fpa
