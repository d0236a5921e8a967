#pragma once

#include "fpa/expansions.hpp"

namespace fpa {

/// Theta_n = sum_k Phi_k Psi_(n-k); length len(a) + len(b) - 1.
QExpansion wick_product(const QExpansion& a, const QExpansion& b);

/// a^(diamond n) by repeated products; n = 0 gives the unit.
QExpansion wick_power(const QExpansion& a, unsigned n);

/// The next three map a through taylor_of_s, apply the formal series
/// operation and map back with s_inverse, keeping n_terms coefficients.
QExpansion wick_exp(const QExpansion& a, unsigned n_terms);

/// Requires Phi_0 real and > 0.
QExpansion wick_log(const QExpansion& a, unsigned n_terms);

/// Requires Phi_0 != 0.
QExpansion wick_inverse(const QExpansion& a, unsigned n_terms);

/// Coefficientwise sum, zero-padded to the longer length.
QExpansion operator+(const QExpansion& a, const QExpansion& b);
QExpansion operator*(Complex s, const QExpansion& a);

/// Keeps the first n coefficients, zero-padding if shorter.
QExpansion truncate(const QExpansion& a, unsigned n);

}  // namespace fpa
