#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

#include "fpa/expansions.hpp"
#include "fpa/polynomials.hpp"

namespace fpa {

/// Default trust radius for Taylor series obtained from Q-expansions: ln 2,
/// where |e^z - 1| = 1 on the real axis.
inline const double kDefaultTrustRadius = std::log(2.0);

/// (S Phi)(z) = sum Phi_n (e^z - 1)^n, evaluated exactly on the finite sum.
Complex s_transform(const QExpansion& q, Complex z);

/// sum_k p(k) e^(zk) pmf(k) / l(z), with a certified tail.
Complex s_transform_direct(const Poly& p, const FpmParams& params, Complex z, double tail_tol = 1e-15);

/// (C phi)(z) = sum phi_n (z)_n.
Complex c_transform(const CExpansion& e, Complex z);

/// sum_k phi(k + z) pmf(k) with phi = sum phi_n C_n expanded to monomials.
Complex c_transform_direct(const CExpansion& e, const PolyFamily& family, Complex z, double tail_tol = 1e-15);

/// Phi_n = (1/n!) sum_k k! s(n,k) u_k: the Q-expansion whose S-transform has
/// Taylor coefficients u.
QExpansion s_inverse(const TaylorSeries& u, const FpmParams& params);

/// u_k = (1/k!) sum_n Phi_n n! S(k,n) for k < n_terms.
TaylorSeries taylor_of_s(const QExpansion& q, unsigned n_terms, double trust_radius = kDefaultTrustRadius);

using Rational = boost::multiprecision::cpp_rational;

/// Exact rational versions of the two coefficient maps above.
std::vector<Rational> s_inverse_exact(const std::vector<Rational>& u);
std::vector<Rational> taylor_of_s_exact(const std::vector<Rational>& phi, unsigned n_terms);

/// e^z - 1 without cancellation near 0.
Complex expm1(Complex z);

}  // namespace fpa
