#pragma once

#include <string>
#include <vector>

#include "fpa/errors.hpp"
#include "fpa/measure.hpp"

namespace fpa {

/// Test function sum phi_n C_n against the generalized Appell basis.
struct CExpansion {
  FpmParams params;
  std::vector<Complex> coeffs;
};

/// Generalized function sum Phi_n Q_n against the dual Appell system. Q_n
/// exists only through pairing and the S-transform.
struct QExpansion {
  FpmParams params;
  std::vector<Complex> coeffs;
};

/// Truncated power series u_0 + u_1 z + ... around 0. Values at |z| beyond
/// trust_radius are not backed by the truncation.
struct TaylorSeries {
  std::vector<Complex> coeffs;
  double trust_radius = 0.0;
};

/// Horner evaluation of the truncated series.
Complex taylor_eval(const TaylorSeries& u, Complex z);

/// Expansion with a single 1 at index n.
inline QExpansion q_unit(const FpmParams& params, unsigned n) {
  QExpansion q{params, std::vector<Complex>(n + 1, Complex{0.0, 0.0})};
  q.coeffs[n] = 1.0;
  return q;
}

inline CExpansion c_unit(const FpmParams& params, unsigned n) {
  CExpansion e{params, std::vector<Complex>(n + 1, Complex{0.0, 0.0})};
  e.coeffs[n] = 1.0;
  return e;
}

inline void require_same_params(const FpmParams& a, const FpmParams& b, const char* where) {
  if (!(a == b)) throw ArgumentError(std::string(where) + ": expansions carry different (lambda, beta)");
}

}  // namespace fpa
