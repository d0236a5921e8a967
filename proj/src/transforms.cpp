#include "fpa/transforms.hpp"

#include "fpa/combinatorics.hpp"

namespace fpa {

Complex taylor_eval(const TaylorSeries& u, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = u.coeffs.rbegin(); it != u.coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

Complex s_transform(const QExpansion& q, Complex z) {
  const Complex w = expm1(z);
  Complex acc{0.0, 0.0};
  for (auto it = q.coeffs.rbegin(); it != q.coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Complex s_transform_direct(const Poly& p, const FpmParams& params, Complex z, double tail_tol) {
  auto weight = [&](unsigned k) {
    detail::Weight w;
    w.log_scale = static_cast<long double>(z.real()) * k;
    const Scalar pk = poly_eval(p, Scalar(static_cast<double>(k)));
    w.factor = std::complex<long double>(static_cast<long double>(pk.real()), static_cast<long double>(pk.imag())) *
               std::polar(1.0L, static_cast<long double>(z.imag()) * k);
    return w;
  };
  const Complex num = detail::certified_pmf_sum(params, weight, tail_tol).value;
  return num / laplace_transform(params, z);
}

Complex c_transform(const CExpansion& e, Complex z) {
  Complex acc{0.0, 0.0};
  Complex ff{1.0, 0.0};
  for (unsigned n = 0; n < e.coeffs.size(); ++n) {
    acc += e.coeffs[n] * ff;
    ff *= z - static_cast<double>(n);
  }
  return acc;
}

Complex c_transform_direct(const CExpansion& e, const PolyFamily& family, Complex z, double tail_tol) {
  require_same_params(e.params, family.params, "c_transform_direct");
  const Poly shifted = shift(c_basis_to_monomial(e, family), to_scalar(z));
  auto weight = [&](unsigned k) {
    detail::Weight w;
    const Scalar v = poly_eval(shifted, Scalar(static_cast<double>(k)));
    w.factor = {static_cast<long double>(v.real()), static_cast<long double>(v.imag())};
    return w;
  };
  return detail::certified_pmf_sum(e.params, weight, tail_tol).value;
}

QExpansion s_inverse(const TaylorSeries& u, const FpmParams& params) {
  const unsigned n_len = static_cast<unsigned>(u.coeffs.size());
  QExpansion out{params, std::vector<Complex>(n_len, Complex{0.0, 0.0})};
  if (n_len == 0) return out;
  const auto table = shared_stirling(n_len - 1);
  for (unsigned n = 0; n < n_len; ++n) {
    Complex acc{0.0, 0.0};
    for (unsigned k = 0; k <= n; ++k) {
      acc += (factorial(k) / factorial(n)) * table->first_value(n, k) * u.coeffs[k];
    }
    out.coeffs[n] = acc;
  }
  return out;
}

TaylorSeries taylor_of_s(const QExpansion& q, unsigned n_terms, double trust_radius) {
  TaylorSeries u{std::vector<Complex>(n_terms, Complex{0.0, 0.0}), trust_radius};
  if (n_terms == 0) return u;
  const auto table = shared_stirling(n_terms - 1);
  for (unsigned k = 0; k < n_terms; ++k) {
    Complex acc{0.0, 0.0};
    for (unsigned n = 0; n <= k && n < q.coeffs.size(); ++n) {
      acc += (factorial(n) / factorial(k)) * table->second_value(k, n) * q.coeffs[n];
    }
    u.coeffs[k] = acc;
  }
  return u;
}

namespace {

BigInt big_factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Rational> s_inverse_exact(const std::vector<Rational>& u) {
  const unsigned n_len = static_cast<unsigned>(u.size());
  std::vector<Rational> out(n_len);
  if (n_len == 0) return out;
  const auto table = shared_stirling(n_len - 1);
  for (unsigned n = 0; n < n_len; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += Rational(big_factorial(k) * table->first(n, k)) * u[k];
    out[n] = acc / Rational(big_factorial(n));
  }
  return out;
}

std::vector<Rational> taylor_of_s_exact(const std::vector<Rational>& phi, unsigned n_terms) {
  std::vector<Rational> out(n_terms);
  if (n_terms == 0) return out;
  const auto table = shared_stirling(n_terms - 1);
  for (unsigned k = 0; k < n_terms; ++k) {
    Rational acc = 0;
    for (unsigned n = 0; n <= k && n < phi.size(); ++n) {
      acc += Rational(big_factorial(n) * table->second(k, n)) * phi[n];
    }
    out[k] = acc / Rational(big_factorial(k));
  }
  return out;
}

}  // namespace fpa
