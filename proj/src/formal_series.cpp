#include "fpa/formal_series.hpp"

#include <algorithm>

namespace fpa {

namespace {

Complex at(const std::vector<Complex>& a, unsigned i) { return i < a.size() ? a[i] : Complex{0.0, 0.0}; }

}  // namespace

std::vector<Complex> series_exp(const std::vector<Complex>& a, unsigned n) {
  std::vector<Complex> b(n, Complex{0.0, 0.0});
  if (n == 0) return b;
  b[0] = std::exp(at(a, 0));
  for (unsigned m = 1; m < n; ++m) {
    Complex acc{0.0, 0.0};
    for (unsigned k = 1; k <= m; ++k) acc += static_cast<double>(k) * at(a, k) * b[m - k];
    b[m] = acc / static_cast<double>(m);
  }
  return b;
}

std::vector<Complex> series_log(const std::vector<Complex>& a, unsigned n) {
  const Complex a0 = at(a, 0);
  if (a0 == Complex{0.0, 0.0}) throw DomainError("series_log: constant term is zero");
  std::vector<Complex> b(n, Complex{0.0, 0.0});
  if (n == 0) return b;
  b[0] = std::log(a0);
  for (unsigned m = 1; m < n; ++m) {
    Complex acc{0.0, 0.0};
    for (unsigned k = 1; k < m; ++k) acc += static_cast<double>(k) * b[k] * at(a, m - k);
    b[m] = (at(a, m) - acc / static_cast<double>(m)) / a0;
  }
  return b;
}

std::vector<Complex> series_reciprocal(const std::vector<Complex>& a, unsigned n) {
  const Complex a0 = at(a, 0);
  if (a0 == Complex{0.0, 0.0}) throw DomainError("series_reciprocal: constant term is zero");
  std::vector<Complex> b(n, Complex{0.0, 0.0});
  if (n == 0) return b;
  b[0] = 1.0 / a0;
  for (unsigned m = 1; m < n; ++m) {
    Complex acc{0.0, 0.0};
    for (unsigned k = 1; k <= m; ++k) acc += at(a, k) * b[m - k];
    b[m] = -acc / a0;
  }
  return b;
}

std::vector<Complex> series_multiply(const std::vector<Complex>& a, const std::vector<Complex>& b, unsigned n) {
  std::vector<Complex> c(n, Complex{0.0, 0.0});
  for (unsigned i = 0; i < std::min<std::size_t>(n, a.size()); ++i) {
    for (unsigned j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace fpa
