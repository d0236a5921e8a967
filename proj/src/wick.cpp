#include "fpa/wick.hpp"

#include <algorithm>

#include "fpa/formal_series.hpp"
#include "fpa/transforms.hpp"

namespace fpa {

QExpansion wick_product(const QExpansion& a, const QExpansion& b) {
  require_same_params(a.params, b.params, "wick_product");
  if (a.coeffs.empty() || b.coeffs.empty()) return {a.params, {}};
  QExpansion out{a.params, std::vector<Complex>(a.coeffs.size() + b.coeffs.size() - 1, Complex{0.0, 0.0})};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

QExpansion wick_power(const QExpansion& a, unsigned n) {
  QExpansion out = q_unit(a.params, 0);
  for (unsigned i = 0; i < n; ++i) out = wick_product(out, a);
  return out;
}

namespace {

template <class Op>
QExpansion through_s(const QExpansion& a, unsigned n_terms, Op op) {
  const TaylorSeries u = taylor_of_s(a, n_terms);
  return s_inverse(TaylorSeries{op(u.coeffs, n_terms), u.trust_radius}, a.params);
}

Complex head(const QExpansion& a) { return a.coeffs.empty() ? Complex{0.0, 0.0} : a.coeffs[0]; }

}  // namespace

QExpansion wick_exp(const QExpansion& a, unsigned n_terms) { return through_s(a, n_terms, series_exp); }

QExpansion wick_log(const QExpansion& a, unsigned n_terms) {
  const Complex e = head(a);
  if (!(e.imag() == 0.0 && e.real() > 0.0)) {
    throw DomainError("wick_log: needs a real, positive expectation Phi_0");
  }
  return through_s(a, n_terms, series_log);
}

QExpansion wick_inverse(const QExpansion& a, unsigned n_terms) {
  if (head(a) == Complex{0.0, 0.0}) throw DomainError("wick_inverse: needs a nonzero expectation Phi_0");
  return through_s(a, n_terms, series_reciprocal);
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  require_same_params(a.params, b.params, "operator+");
  QExpansion out{a.params, std::vector<Complex>(std::max(a.coeffs.size(), b.coeffs.size()), Complex{0.0, 0.0})};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

QExpansion operator*(Complex s, const QExpansion& a) {
  QExpansion out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

QExpansion truncate(const QExpansion& a, unsigned n) {
  QExpansion out = a;
  out.coeffs.resize(n, Complex{0.0, 0.0});
  return out;
}

}  // namespace fpa
