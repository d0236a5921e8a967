#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "fpa/errors.hpp"

namespace fpa {

/// Quad precision (113-bit mantissa) for polynomial coefficients and moments.
/// Appell coefficients cancel against the moments by up to ~1e11 at degree
/// 10, so double storage cannot hold the identities to 1e-10.
using Real = boost::multiprecision::float128;
using Scalar = boost::multiprecision::complex128;

inline Complex to_complex(const Scalar& s) {
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

inline Scalar to_scalar(Complex c) { return Scalar(c.real(), c.imag()); }

}  // namespace fpa
