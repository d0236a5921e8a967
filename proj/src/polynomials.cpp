#include "fpa/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpa/combinatorics.hpp"

namespace fpa {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  trim();
}

Poly::Poly(const std::vector<Complex>& coeffs) {
  for (const auto& c : coeffs) coeffs_.push_back(to_scalar(c));
  if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  trim();
}

Poly Poly::monomial(unsigned n, Complex c) {
  std::vector<Scalar> v(n + 1, Scalar(0));
  v[n] = to_scalar(c);
  return Poly(std::move(v));
}

std::vector<Complex> Poly::coeffs_double() const {
  std::vector<Complex> out;
  for (const auto& c : coeffs_) out.push_back(to_complex(c));
  return out;
}

void Poly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Scalar poly_eval(const Poly& p, const Scalar& z) {
  const auto& c = p.coeffs();
  Scalar acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex poly_eval(const Poly& p, Complex z) { return to_complex(poly_eval(p, to_scalar(z))); }

Poly derivative(const Poly& p, unsigned k) {
  if (k > p.degree()) return Poly{};
  std::vector<Scalar> out(p.degree() - k + 1);
  for (unsigned n = k; n <= p.degree(); ++n) {
    Real f = 1;
    for (unsigned i = 0; i < k; ++i) f *= (n - i);
    out[n - k] = p[n] * Scalar(f);
  }
  return Poly(std::move(out));
}

Poly shift(const Poly& p, const Scalar& a) {
  const unsigned d = p.degree();
  std::vector<Scalar> out(d + 1, Scalar(0));
  for (unsigned n = 0; n <= d; ++n) {
    if (p[n] == Scalar(0)) continue;
    Scalar apow(1);
    for (unsigned m = n + 1; m-- > 0;) {
      out[m] += p[n] * Scalar(binomial(n, m)) * apow;
      apow *= a;
    }
  }
  return Poly(std::move(out));
}

Poly difference(const Poly& p, unsigned k) {
  if (k > p.degree()) return Poly{};
  Poly acc;
  for (unsigned j = 0; j <= k; ++j) {
    const double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
    acc += shift(p, Scalar(static_cast<double>(j))) * Scalar(sign * binomial(k, j));
  }
  // Every coefficient above degree - k cancels in exact arithmetic.
  std::vector<Scalar> c = acc.coeffs();
  c.resize(std::min<std::size_t>(c.size(), p.degree() - k + 1));
  return Poly(std::move(c));
}

Poly difference_stirling_series(const Poly& p, unsigned k) {
  if (k > p.degree()) return Poly{};
  const auto table = shared_stirling(p.degree());
  Poly acc;
  for (unsigned n = k; n <= p.degree(); ++n) {
    const Real w = factorial_real(k) * table->second_real(n, k) / factorial_real(n);
    acc += derivative(p, n) * Scalar(w);
  }
  return acc;
}

double max_imag(const Poly& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(static_cast<double>(c.imag())));
  return m;
}

const Poly& PolyFamily::operator[](unsigned n) const {
  if (n >= polys.size()) {
    throw ArgumentError("PolyFamily: degree " + std::to_string(n) + " requested, family holds up to " +
                        std::to_string(n_max()));
  }
  return polys[n];
}

namespace {

// b_j = sum_i (-1)^i i! B_{j,i}(m_1, ..., m_{j-i+1}), the j-th derivative at 0
// of the reciprocal of the series with moments m.
std::vector<Scalar> reciprocal_brackets(const std::vector<Real>& m, unsigned n) {
  std::vector<Scalar> b(n + 1, Scalar(0));
  b[0] = Scalar(1);
  for (unsigned j = 1; j <= n; ++j) {
    Scalar acc(0);
    for (unsigned i = 1; i <= j; ++i) {
      std::vector<Scalar> args(j - i + 1);
      for (unsigned t = 0; t < args.size(); ++t) args[t] = Scalar(m[t + 1]);
      const Real w = (i % 2 == 0 ? 1 : -1) * factorial_real(i);
      acc += Scalar(w) * bell_partial(j, i, std::span<const Scalar>(args));
    }
    b[j] = acc;
  }
  return b;
}

void require_cache(const MomentCache& cache, const FpmParams& params, unsigned n) {
  if (!(cache.params() == params)) throw ArgumentError("MomentCache built for different (lambda, beta)");
  if (cache.n_max() < n) {
    throw ArgumentError("MomentCache holds moments up to " + std::to_string(cache.n_max()) + ", need " +
                        std::to_string(n));
  }
}

}  // namespace

Poly build_appell(const FpmParams& params, unsigned n, const MomentCache& cache) {
  require_cache(cache, params, n);
  const auto b = reciprocal_brackets(cache.moments_real(), n);
  std::vector<Scalar> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = Scalar(binomial(n, k)) * b[n - k];
  return Poly(std::move(c));
}

Poly build_gen_appell(const FpmParams& params, unsigned n, const MomentCache& cache) {
  require_cache(cache, params, n);
  const auto b = reciprocal_brackets(cache.tildes_real(), n);
  const auto table = shared_stirling(n);
  std::vector<Scalar> c(n + 1, Scalar(0));
  for (unsigned k = 0; k <= n; ++k) {
    const Scalar ff = Scalar(binomial(n, k)) * b[n - k];
    for (unsigned m = 0; m <= k; ++m) c[m] += ff * Scalar(table->first_real(k, m));
  }
  return Poly(std::move(c));
}

Poly gen_appell_via_p1(const FpmParams& params, unsigned n, const MomentCache& cache) {
  const PolyFamily a = appell_family(params, n, cache);
  const auto table = shared_stirling(n);
  Poly acc;
  for (unsigned m = 0; m <= n; ++m) acc += a[m] * Scalar(table->first_real(n, m));
  return acc;
}

PolyFamily appell_family(const FpmParams& params, unsigned n_max, const MomentCache& cache) {
  PolyFamily f{params, FamilyKind::Appell, {}};
  for (unsigned n = 0; n <= n_max; ++n) f.polys.push_back(build_appell(params, n, cache));
  return f;
}

PolyFamily gen_appell_family(const FpmParams& params, unsigned n_max, const MomentCache& cache) {
  PolyFamily f{params, FamilyKind::GeneralizedAppell, {}};
  for (unsigned n = 0; n <= n_max; ++n) f.polys.push_back(build_gen_appell(params, n, cache));
  return f;
}

CExpansion monomial_to_c_basis(const Poly& p, const PolyFamily& family, const MomentCache& cache) {
  const unsigned d = p.degree();
  if (family.n_max() < d) {
    throw ArgumentError("monomial_to_c_basis: family holds degree " + std::to_string(family.n_max()) +
                        ", polynomial has degree " + std::to_string(d));
  }
  require_cache(cache, family.params, d);
  const auto table = shared_stirling(d);
  std::vector<Scalar> phi(d + 1, Scalar(0));
  for (unsigned n = 0; n <= d; ++n) {
    if (p[n] == Scalar(0)) continue;
    for (unsigned m = 0; m <= n; ++m) {
      Real w = 0;
      for (unsigned k = m; k <= n; ++k) {
        w += binomial(n, k) * table->second_real(k, m) * cache.moments_real()[n - k];
      }
      phi[m] += p[n] * Scalar(w);
    }
  }
  CExpansion out{family.params, {}};
  for (const auto& c : phi) out.coeffs.push_back(to_complex(c));
  return out;
}

Poly c_basis_to_monomial(const CExpansion& e, const PolyFamily& family) {
  Poly acc;
  for (unsigned n = 0; n < e.coeffs.size(); ++n) {
    if (e.coeffs[n] != Complex{0.0, 0.0}) acc += family[n] * e.coeffs[n];
  }
  return acc;
}

double check_p3(const PolyFamily& family, unsigned n, Complex x, Complex y, const MomentCache& cache) {
  const Scalar xs = to_scalar(x);
  const Scalar ys = to_scalar(y);
  const Scalar lhs = poly_eval(family[n], Scalar(xs + ys));
  Scalar rhs(0);
  for (unsigned k = 0; k <= n; ++k) {
    const Scalar ck = poly_eval(family[k], xs);
    for (unsigned l = 0; k + l <= n; ++l) {
      const unsigned m = n - k - l;
      const Real w = factorial_real(n) / (factorial_real(k) * factorial_real(l) * factorial_real(m));
      rhs += Scalar(w * cache.tildes_real()[m]) * ck * poly_eval(family[l], ys);
    }
  }
  return static_cast<double>(abs(Scalar(lhs - rhs)));
}

double check_p4(const PolyFamily& family, unsigned n, Complex x, Complex y) {
  const Scalar xs = to_scalar(x);
  const Scalar ys = to_scalar(y);
  const Scalar lhs = poly_eval(family[n], Scalar(xs + ys));
  Scalar rhs(0);
  Scalar ff(1);
  // (y)_(n-k) built upward in j = n - k.
  std::vector<Scalar> falling(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    falling[j] = ff;
    ff *= ys - Scalar(static_cast<double>(j));
  }
  for (unsigned k = 0; k <= n; ++k) rhs += Scalar(binomial(n, k)) * poly_eval(family[k], xs) * falling[n - k];
  return static_cast<double>(abs(Scalar(lhs - rhs)));
}

AppellBound appell_bound_constants(const FpmParams& params, double eps) {
  if (!(eps > 0.0 && eps <= 0.6)) throw ArgumentError("appell_bound_constants: eps must lie in (0, 0.6]");
  const double sigma = 1.0 - std::exp(-eps);
  double worst = 0.0;
  constexpr int kPoints = 64;
  for (int i = 0; i < kPoints; ++i) {
    const Complex z = std::polar(sigma, 2.0 * M_PI * i / kPoints);
    const Complex l = ml_eval(params.beta(), params.lambda() * z, kMeasureMl);
    worst = std::max(worst, 1.0 / std::abs(l));
  }
  return {1.05 * worst, sigma};
}

}  // namespace fpa
