#pragma once

#include "fpa/expansions.hpp"
#include "fpa/polynomials.hpp"

namespace fpa {

/// E[p] = sum_n p_n M(n), accumulated in quad precision.
Complex expectation(const Poly& p, const MomentCache& cache);
Scalar expectation_real(const Poly& p, const MomentCache& cache);

/// <<p, Q_m>> = integral of (Delta^m p) d pi, through difference().
Complex q_action(unsigned m, const Poly& p, const MomentCache& cache);

/// Same pairing through m! sum_{k>=m} S(k,m)/k! integral of (d^k p) d pi.
Complex q_action_stirling(unsigned m, const Poly& p, const MomentCache& cache);

/// Integral of d^k C_n / dx^k against pi. Equals k! s(n,k).
Complex int_deriv_c(unsigned n, unsigned k, const PolyFamily& family, const MomentCache& cache);

/// <<phi, Phi>> = sum_k k! phi_k Phi_k over the common length.
Complex dual_pair(const CExpansion& e, const QExpansion& q);

/// Phi_k = (1/k!) integral of C_k p d pi for k = 0..family.n_max().
///
/// For beta < 1 this is not the C-basis expansion of p: the C_n are not
/// orthogonal in L2(pi), and the projection of a polynomial onto the
/// Q-system is an infinite sequence truncated at the family length.
QExpansion project_to_q(const Poly& p, const PolyFamily& family, const MomentCache& cache);

/// delta_z with coefficients C_n(z)/n!, n = 0..n_max.
QExpansion delta_z(Complex z, const PolyFamily& family, unsigned n_max);

/// rho(-shift, .) with coefficients (shift)_k / k!, k = 0..n_max. Pairing
/// with phi gives the integral of phi(x + shift) d pi; rho(z, .) in the usual
/// notation is rho(-z).
QExpansion rho(Complex shift, const FpmParams& params, unsigned n_max);

}  // namespace fpa
