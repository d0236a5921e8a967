#pragma once

#include <vector>

#include "fpa/expansions.hpp"

namespace fpa {

enum class NormSign { Test, Distribution };

struct NormParams {
  unsigned q = 0;
  double kappa = 0.0;
  NormSign sign = NormSign::Test;
};

enum class NormStatus { Ok, Overflow, Divergent, Untrusted };

const char* to_string(NormStatus s);

struct NormResult {
  double value = 0.0;
  NormStatus status = NormStatus::Ok;
};

/// Partial sums above this that still grow by more than kGrowthFactor per
/// term mark a weighted series as divergent.
inline constexpr double kDivergenceLevel = 1e12;
inline constexpr double kGrowthFactor = 1.01;

/// sqrt(sum (n!)^(1+kappa) 2^(nq) |phi_n|^2). Requires sign == Test.
NormResult test_norm(const CExpansion& e, const NormParams& np);

/// sqrt(sum (n!)^(1-kappa) 2^(-nq) |Phi_n|^2). Requires sign == Distribution.
NormResult dist_norm(const QExpansion& q, const NormParams& np);

/// Squared Hilbert-Schmidt norm of the embedding H_p -> H_q, 1/(1 - 2^(q-p)).
double hs_embedding_norm(unsigned p, unsigned q);

/// sup over |z| in radius_grid and 32 angles of |u(z)| exp(-2^-l |z|^k).
///
/// Divergent (value +inf) when the weighted maximum is still rising at the
/// outermost radius; Untrusted when the grid leaves the trust radius.
NormResult entire_type_norm(const TaylorSeries& u, unsigned l, double k, const std::vector<double>& radius_grid);

/// Squared weighted coefficient sum: sum (n!)^(1+kappa) 2^(nq) |u_n|^2 for
/// Test, sum (n!)^(1-kappa) 2^(-nq) |u_n|^2 for Distribution.
NormResult seminorm_series(const TaylorSeries& u, unsigned q, double kappa, NormSign sign);

namespace detail {

/// Squared weighted sum of |c_n|^2 exp(log_weight(n)) with the divergence
/// and overflow rules above.
NormResult weighted_square_sum(const std::vector<Complex>& c, double factorial_power, double log2_step);

}  // namespace detail

}  // namespace fpa
