#pragma once

#include <initializer_list>
#include <vector>

#include "fpa/expansions.hpp"
#include "fpa/measure.hpp"
#include "fpa/precision.hpp"

namespace fpa {

/// Dense polynomial over quad-precision complex coefficients, index =
/// degree. Trailing exact zeros are dropped; the zero polynomial is {0}.
class Poly {
 public:
  Poly() : coeffs_{Scalar(0)} {}
  explicit Poly(std::vector<Scalar> coeffs);
  explicit Poly(const std::vector<Complex>& coeffs);
  Poly(std::initializer_list<Complex> coeffs) : Poly(std::vector<Complex>(coeffs)) {}

  static Poly monomial(unsigned n, Complex c = 1.0);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Scalar(0); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^n, zero past the degree.
  Scalar operator[](unsigned n) const { return n < coeffs_.size() ? coeffs_[n] : Scalar(0); }
  /// Same, rounded to double.
  Complex coeff(unsigned n) const { return to_complex((*this)[n]); }
  std::vector<Complex> coeffs_double() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, Complex s) { return a *= to_scalar(s); }
  friend Poly operator*(Complex s, Poly a) { return a *= to_scalar(s); }
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Horner evaluation in quad precision, rounded to double.
Complex poly_eval(const Poly& p, Complex z);
Scalar poly_eval(const Poly& p, const Scalar& z);

/// k-th derivative.
Poly derivative(const Poly& p, unsigned k);

/// p(x + a).
Poly shift(const Poly& p, const Scalar& a);

/// k-fold forward difference sum_j (-1)^(k-j) C(k,j) p(x + j).
Poly difference(const Poly& p, unsigned k);

/// Same operator as k! sum_{n>=k} S(n,k)/n! d^n/dx^n.
Poly difference_stirling_series(const Poly& p, unsigned k);

/// Largest |Im| over the coefficients.
double max_imag(const Poly& p);

enum class FamilyKind { Appell, GeneralizedAppell };

/// Polynomials for degrees 0..n_max of one kind. Immutable once built.
struct PolyFamily {
  FpmParams params;
  FamilyKind kind;
  std::vector<Poly> polys;

  unsigned n_max() const { return static_cast<unsigned>(polys.size() - 1); }
  const Poly& operator[](unsigned n) const;
};

/// A_n through the Bell closed form in the moments M(1..n).
Poly build_appell(const FpmParams& params, unsigned n, const MomentCache& cache);

/// C_n through the Bell closed form in M~(1..n), assembled over falling
/// factorials and expanded with exact Stirling numbers of the first kind.
Poly build_gen_appell(const FpmParams& params, unsigned n, const MomentCache& cache);

/// C_n = sum_m s(n,m) A_m.
Poly gen_appell_via_p1(const FpmParams& params, unsigned n, const MomentCache& cache);

PolyFamily appell_family(const FpmParams& params, unsigned n_max, const MomentCache& cache);
PolyFamily gen_appell_family(const FpmParams& params, unsigned n_max, const MomentCache& cache);

/// Coefficients phi with p = sum phi_m C_m, via
/// x^n = sum_m [sum_k C(n,k) S(k,m) M(n-k)] C_m.
CExpansion monomial_to_c_basis(const Poly& p, const PolyFamily& family, const MomentCache& cache);

/// sum phi_n C_n as a monomial-basis polynomial.
Poly c_basis_to_monomial(const CExpansion& e, const PolyFamily& family);

/// |C_n(x+y) - sum_{k+l+m=n} n!/(k! l! m!) C_k(x) C_l(y) M~(m)|.
double check_p3(const PolyFamily& family, unsigned n, Complex x, Complex y, const MomentCache& cache);

/// |C_n(x+y) - sum_k C(n,k) C_k(x) (y)_{n-k}|.
double check_p4(const PolyFamily& family, unsigned n, Complex x, Complex y);

struct AppellBound {
  double c_eps;
  double sigma_eps;
};

/// Constants in |C_n(x)| <= C_eps n! sigma_eps^-n e^(eps |x|). sigma_eps =
/// 1 - e^-eps keeps |log(1+z)| <= eps on |z| = sigma_eps; C_eps is 1.05 times
/// the largest 1/|E_beta(lambda z)| over 64 points of that circle.
AppellBound appell_bound_constants(const FpmParams& params, double eps);

}  // namespace fpa
