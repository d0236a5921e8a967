#pragma once

#include <vector>

#include "fpa/errors.hpp"

namespace fpa {

/// Truncated power series operations on coefficient vectors; every result has
/// exactly n coefficients. Inputs shorter than n are zero-padded.
std::vector<Complex> series_exp(const std::vector<Complex>& a, unsigned n);

/// Principal log of a_0 for the constant term. Requires a_0 != 0.
std::vector<Complex> series_log(const std::vector<Complex>& a, unsigned n);

/// Requires a_0 != 0.
std::vector<Complex> series_reciprocal(const std::vector<Complex>& a, unsigned n);

/// Cauchy product truncated to n coefficients.
std::vector<Complex> series_multiply(const std::vector<Complex>& a, const std::vector<Complex>& b, unsigned n);

}  // namespace fpa
