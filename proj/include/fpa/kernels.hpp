#pragma once

#include <vector>

#include "fpa/expansions.hpp"
#include "fpa/measure.hpp"
#include "fpa/polynomials.hpp"

namespace fpa {

/// pmf(k) for k in [k_begin, k_end), OpenMP-parallel over k.
///
/// Shares one table a_n = lambda^n / Gamma(beta n + 1) per precision tier
/// across all k and sums sum_{n>=k} (-1)^(n-k) C(n,k) a_n, escalating only
/// the k whose long double sum is dominated by cancellation.
std::vector<long double> pmf_block(const FpmParams& params, unsigned k_begin, unsigned k_end);

/// Reference: pmf_extended(params, k) one k at a time.
std::vector<long double> pmf_block_serial(const FpmParams& params, unsigned k_begin, unsigned k_end);

enum class PairingRoute { Difference, StirlingSeries };

/// G[n][m] = <<C_n, Q_m>> for n, m <= family.n_max(), row-major,
/// OpenMP-parallel over rows.
std::vector<Complex> gram_matrix(const PolyFamily& family, const MomentCache& cache, PairingRoute route);
std::vector<Complex> gram_matrix_serial(const PolyFamily& family, const MomentCache& cache, PairingRoute route);

/// For each radius r: max over 32 equally spaced angles of
/// |u(r e^(i t))| exp(-2^-l r^k). OpenMP-parallel over (radius, angle).
std::vector<double> weighted_radial_max(const TaylorSeries& u, unsigned l, double k,
                                        const std::vector<double>& radii);
std::vector<double> weighted_radial_max_serial(const TaylorSeries& u, unsigned l, double k,
                                               const std::vector<double>& radii);

inline constexpr int kGridAngles = 32;

}  // namespace fpa
