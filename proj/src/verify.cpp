#include "fpa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "fpa/appell_system.hpp"
#include "fpa/combinatorics.hpp"
#include "fpa/kernels.hpp"
#include "fpa/spaces.hpp"
#include "fpa/transforms.hpp"
#include "fpa/wick.hpp"

namespace fpa {

namespace {

using Rng = std::mt19937_64;
constexpr double kInf = std::numeric_limits<double>::infinity();

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  void check(const std::string& name, double threshold, const std::function<double()>& residual) {
    CheckResult r{name, kInf, threshold, false};
    try {
      r.residual = residual();
    } catch (const std::exception&) {
      r.residual = kInf;
    }
    r.pass = r.residual <= threshold;
    out_.push_back(r);
  }

 private:
  std::vector<CheckResult>& out_;
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Complex random_complex(Rng& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double re = u(rng);
  return {re, u(rng)};
}

std::vector<Complex> random_coeffs(Rng& rng, std::size_t n, double scale) {
  std::vector<Complex> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_complex(rng, scale));
  return v;
}

void measure_suite(const FpmParams& p, Rng&, std::vector<CheckResult>& out) {
  Suite s(out);
  s.check("normalization_defect_k200", 1e-12, [&] {
    const auto v = pmf_block(p, 0, 201);
    long double sum = 0.0L;
    for (auto x : v) sum += x;
    return static_cast<double>(std::fabs(sum - 1.0L));
  });
  s.check("pmf_nonnegative", 1e-15, [&] {
    const auto v = pmf_block(p, 0, 201);
    return static_cast<double>(std::max(0.0L, -*std::min_element(v.begin(), v.end())));
  });
  if (p.beta() == 1.0) {
    s.check("poisson_reduction_k50", 1e-12, [&] {
      double worst = 0.0;
      double poisson = std::exp(-p.lambda());
      for (unsigned k = 0; k <= 50; ++k) {
        if (k > 0) poisson *= p.lambda() / k;
        worst = std::max(worst, std::fabs(pmf(p, k) - poisson));
      }
      return worst;
    });
    s.check("laplace_poisson_closed_form", 1e-12, [&] {
      double worst = 0.0;
      for (Complex z : {Complex{0.3, 0.0}, Complex{-0.5, 0.2}, Complex{0.0, 1.0}}) {
        worst = std::max(worst, rel(laplace_transform(p, z), std::exp(p.lambda() * (std::exp(z) - 1.0))));
      }
      return worst;
    });
  }
  s.check("moment_closed_form_vs_oracle_n8", 1e-10, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
      const double m = moment(p, n);
      worst = std::max(worst, std::fabs(moment_oracle(p, n) - m) / m);
    }
    return worst;
  });
  s.check("laplace_vs_direct_sum", 1e-10, [&] {
    double worst = 0.0;
    for (Complex z : {Complex{0.3, 0.0}, Complex{-0.7, 0.0}, Complex{0.0, 0.6}, Complex{-0.4, -0.4}}) {
      auto weight = [z](unsigned k) {
        detail::Weight w;
        w.log_scale = static_cast<long double>(z.real()) * k;
        w.factor = std::polar(1.0L, static_cast<long double>(z.imag()) * k);
        return w;
      };
      const Complex direct = detail::certified_pmf_sum(p, weight, 1e-15).value;
      worst = std::max(worst, rel(laplace_transform(p, z), direct));
    }
    return worst;
  });
  s.check("exp_moment_vs_laplace", 1e-10, [&] {
    const double e = exp_moment(p, 0.5);
    return std::fabs(e - laplace_transform(p, 0.5).real()) / e;
  });
  s.check("ml_negative_axis_in_unit_interval", 0.0, [&] {
    double violations = 0;
    for (int i = 0; i <= 12; ++i) {
      const double v = ml_eval(p.beta(), Complex{-0.25 * i, 0.0}, kMeasureMl).real();
      if (!(v > 0.0 && v <= 1.0)) ++violations;
    }
    return violations;
  });
}

void polynomials_suite(const FpmParams& p, Rng& rng, std::vector<CheckResult>& out) {
  Suite s(out);
  const MomentCache cache(p, 24);
  const PolyFamily c = gen_appell_family(p, 12, cache);
  const PolyFamily a = appell_family(p, 12, cache);

  s.check("monic_n12", 1e-12, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 12; ++n) {
      worst = std::max({worst, std::abs(c[n].coeff(n) - 1.0), std::abs(a[n].coeff(n) - 1.0)});
    }
    return worst;
  });
  s.check("real_coefficients", 1e-12, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 12; ++n) worst = std::max({worst, max_imag(c[n]), max_imag(a[n])});
    return worst;
  });
  s.check("bell_vs_p1_route_n10", 1e-9, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 10; ++n) {
      const Poly q = gen_appell_via_p1(p, n, cache);
      for (unsigned k = 0; k <= n; ++k) worst = std::max(worst, rel(q.coeff(k), c[n].coeff(k)));
    }
    return worst;
  });
  s.check("p5_expectation_n10", 1e-10, [&] {
    double worst = std::abs(expectation(c[0], cache) - 1.0);
    for (unsigned n = 1; n <= 10; ++n) worst = std::max(worst, std::abs(expectation(c[n], cache)));
    return worst;
  });
  std::vector<std::pair<Complex, Complex>> points;
  for (int i = 0; i < 10; ++i) points.emplace_back(random_complex(rng, 2.0), random_complex(rng, 2.0));
  s.check("p3_residual_over_nfact", 1e-8, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
      for (const auto& [x, y] : points) worst = std::max(worst, check_p3(c, n, x, y, cache) / factorial(n));
    }
    return worst;
  });
  s.check("p4_residual_over_nfact", 1e-8, [&] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
      for (const auto& [x, y] : points) worst = std::max(worst, check_p4(c, n, x, y) / factorial(n));
    }
    return worst;
  });
  s.check("p6_bound_ratio", 1.0, [&] {
    const auto b = appell_bound_constants(p, 0.5);
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
      for (int x = 0; x <= 20; ++x) {
        const double bound = b.c_eps * factorial(n) * std::pow(b.sigma_eps, -static_cast<double>(n)) * std::exp(0.5 * x);
        worst = std::max(worst, std::abs(poly_eval(c[n], Complex{static_cast<double>(x), 0.0})) / bound);
      }
    }
    return worst;
  });
  s.check("c_basis_round_trip", 1e-9, [&] {
    CExpansion e{p, random_coeffs(rng, 8, 1.0)};
    const CExpansion back = monomial_to_c_basis(c_basis_to_monomial(e, c), c, cache);
    double worst = 0.0;
    for (unsigned i = 0; i < 8; ++i) worst = std::max(worst, rel(back.coeffs[i], e.coeffs[i]));
    return worst;
  });
  if (p.beta() == 1.0) {
    s.check("charlier_n3", 1e-12, [&] {
      const double l = p.lambda();
      const std::vector<std::vector<double>> expected = {
          {1.0}, {-l, 1.0}, {l * l, -(1.0 + 2.0 * l), 1.0}, {-l * l * l, 2.0 + 3.0 * l + 3.0 * l * l, -(3.0 + 3.0 * l), 1.0}};
      double worst = 0.0;
      for (unsigned n = 0; n <= 3; ++n) {
        for (unsigned k = 0; k <= n; ++k) worst = std::max(worst, std::abs(c[n].coeff(k) - expected[n][k]));
      }
      return worst;
    });
  }
}

void system_suite(const FpmParams& p, Rng& rng, std::vector<CheckResult>& out) {
  Suite s(out);
  const MomentCache cache(p, 24);
  const PolyFamily c = gen_appell_family(p, 10, cache);

  for (auto [route, name] : {std::pair{PairingRoute::Difference, "biorthogonality_difference_n10"},
                             std::pair{PairingRoute::StirlingSeries, "biorthogonality_stirling_n10"}}) {
    s.check(name, 1e-8, [&, route = route] {
      const auto g = gram_matrix(c, cache, route);
      double worst = 0.0;
      for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned m = 0; m <= 10; ++m) {
          const double target = n == m ? factorial(n) : 0.0;
          worst = std::max(worst, std::abs(g[n * 11 + m] - target) / std::max(1.0, factorial(n)));
        }
      }
      return worst;
    });
  }
  s.check("int_deriv_c_n8_scaled", 1.0, [&] {
    const auto table = shared_stirling(8);
    double worst = 0.0;
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned k = 0; k <= 8; ++k) {
        const double target = factorial(k) * table->first_value(n, k);
        const double tol = 1e-8 * std::fabs(target) + 1e-10;
        worst = std::max(worst, std::abs(int_deriv_c(n, k, c, cache) - target) / tol);
      }
    }
    return worst;
  });
  s.check("q_action_routes_agree", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Poly q(random_coeffs(rng, 1 + rng() % 9, 1.0));
      for (unsigned m = 0; m <= q.degree(); ++m) {
        worst = std::max(worst, rel(q_action(m, q, cache), q_action_stirling(m, q, cache)));
      }
    }
    return worst;
  });
  s.check("delta_z_point_evaluation", 1e-9, [&] {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const Complex z = random_complex(rng, 2.0);
      CExpansion e{p, random_coeffs(rng, 1 + rng() % 8, 1.0)};
      const Complex lhs = dual_pair(e, delta_z(z, c, 10));
      worst = std::max(worst, rel(lhs, poly_eval(c_basis_to_monomial(e, c), z)));
    }
    return worst;
  });
  s.check("rho_pairs_to_falling_factorial", 1e-9, [&] {
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Complex z = random_complex(rng, 1.5);
      const QExpansion r = rho(-z, p, 10);
      for (unsigned n = 0; n <= 10; ++n) {
        worst = std::max(worst, rel(dual_pair(c_unit(p, n), r), falling_factorial(-z, n)));
      }
    }
    return worst;
  });
  s.check("rho_shifted_integral", 1e-8, [&] {
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
      const Complex z = random_complex(rng, 1.0);
      CExpansion e{p, random_coeffs(rng, 6, 1.0)};
      const Complex lhs = dual_pair(e, rho(-z, p, 10));
      worst = std::max(worst, rel(lhs, c_transform_direct(e, c, -z)));
    }
    return worst;
  });
}

void wick_suite(const FpmParams& p, Rng& rng, std::vector<CheckResult>& out) {
  Suite s(out);
  auto random_q = [&](std::size_t n, double scale) { return QExpansion{p, random_coeffs(rng, n, scale)}; };
  auto max_diff = [](const QExpansion& a, const QExpansion& b, unsigned n) {
    double worst = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      const Complex x = i < a.coeffs.size() ? a.coeffs[i] : Complex{};
      const Complex y = i < b.coeffs.size() ? b.coeffs[i] : Complex{};
      worst = std::max(worst, std::abs(x - y));
    }
    return worst;
  };

  s.check("s_homomorphism_product", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const QExpansion a = random_q(6, 1.0);
      const QExpansion b = random_q(6, 1.0);
      const Complex z = random_complex(rng, 0.45);
      worst = std::max(worst, rel(s_transform(wick_product(a, b), z), s_transform(a, z) * s_transform(b, z)));
    }
    return worst;
  });
  s.check("exp_log_inverse_pair_n12", 1e-9, [&] {
    QExpansion a = random_q(12, 0.5);
    a.coeffs[0] = a.coeffs[0].real();
    return max_diff(wick_log(wick_exp(a, 12), 12), a, 12);
  });
  s.check("exp_additive_n12", 1e-9, [&] {
    const QExpansion a = random_q(12, 0.5);
    const QExpansion b = random_q(12, 0.5);
    const QExpansion lhs = truncate(wick_product(wick_exp(a, 12), wick_exp(b, 12)), 12);
    return max_diff(lhs, wick_exp(a + b, 12), 12);
  });
  s.check("inverse_gives_unit_n12", 1e-9, [&] {
    QExpansion a = random_q(12, 0.5);
    a.coeffs[0] = 1.0 + std::abs(a.coeffs[0]);
    return max_diff(truncate(wick_product(a, wick_inverse(a, 12)), 12), q_unit(p, 0), 12);
  });
  s.check("product_commutative_associative", 1e-12, [&] {
    const QExpansion a = random_q(7, 1.0);
    const QExpansion b = random_q(5, 1.0);
    const QExpansion c = random_q(6, 1.0);
    return std::max({max_diff(wick_product(a, b), wick_product(b, a), 11),
                     max_diff(wick_product(wick_product(a, b), c), wick_product(a, wick_product(b, c)), 16),
                     max_diff(wick_product(a, b + c), wick_product(a, b) + wick_product(a, c), 12)});
  });
  s.check("norm_inequality_ratio", 1.0 + 1e-12, [&] {
    double worst = 0.0;
    for (auto [pp, qq] : {std::pair{0u, 0u}, std::pair{1u, 2u}}) {
      for (int t = 0; t < 50; ++t) {
        const QExpansion a = random_q(1 + rng() % 10, 1.0);
        const QExpansion b = random_q(1 + rng() % 10, 1.0);
        const double lhs = dist_norm(wick_product(a, b), {pp + qq + 1, 1.0, NormSign::Distribution}).value;
        const double rhs = dist_norm(a, {qq, 1.0, NormSign::Distribution}).value *
                           dist_norm(b, {pp, 1.0, NormSign::Distribution}).value;
        worst = std::max(worst, lhs / rhs);
      }
    }
    return worst;
  });
}

std::vector<Complex> wick_exp_coeffs(double z, unsigned len) {
  std::vector<Complex> v;
  double t = 1.0;
  for (unsigned n = 0; n < len; ++n) {
    v.push_back(t);
    t *= z / (n + 1);
  }
  return v;
}

void spaces_suite(const FpmParams& p, Rng& rng, std::vector<CheckResult>& out) {
  Suite s(out);
  s.check("wick_exp_norm_identity_kappa0", 1e-8, [&] {
    double worst = 0.0;
    for (unsigned q = 0; q <= 3; ++q) {
      for (double z : {0.5, 1.0, 1.5, 2.0}) {
        const CExpansion e{p, wick_exp_coeffs(z, 120)};
        const double sq = std::pow(test_norm(e, {q, 0.0, NormSign::Test}).value, 2);
        const double exact = std::exp(std::ldexp(z * z, static_cast<int>(q)));
        worst = std::max(worst, std::fabs(sq - exact) / exact);
      }
    }
    return worst;
  });
  s.check("kappa1_divergence_threshold_mismatches", 0.0, [&] {
    double mismatches = 0;
    for (unsigned q = 0; q <= 3; ++q) {
      const double threshold = std::pow(2.0, -0.5 * q);
      for (double f : {0.5, 0.9, 1.1, 1.5}) {
        const CExpansion e{p, wick_exp_coeffs(f * threshold, 400)};
        const bool divergent = test_norm(e, {q, 1.0, NormSign::Test}).status == NormStatus::Divergent;
        if (divergent != (f >= 1.0)) ++mismatches;
      }
    }
    return mismatches;
  });
  s.check("kappa_interior_bound_ratio", 1.0, [&] {
    double worst = 0.0;
    for (double kappa : {0.25, 0.5, 0.75}) {
      for (unsigned q = 0; q <= 2; ++q) {
        for (double z : {0.3, 0.8, 1.5}) {
          const CExpansion e{p, wick_exp_coeffs(z, 160)};
          const double sq = std::pow(test_norm(e, {q, kappa, NormSign::Test}).value, 2);
          const double bound = std::pow(2.0, kappa) * std::exp((1.0 - kappa) * std::pow(2.0, (kappa + q) / (1.0 - kappa)) *
                                                             std::pow(z, 2.0 / (1.0 - kappa)));
          worst = std::max(worst, sq / bound);
        }
      }
    }
    return worst;
  });
  s.check("q_monotonicity_violations", 0.0, [&] {
    double violations = 0;
    for (int t = 0; t < 20; ++t) {
      const auto coeffs = random_coeffs(rng, 1 + rng() % 10, 1.0);
      for (unsigned q = 0; q < 5; ++q) {
        const double t0 = test_norm(CExpansion{p, coeffs}, {q, 0.5, NormSign::Test}).value;
        const double t1 = test_norm(CExpansion{p, coeffs}, {q + 1, 0.5, NormSign::Test}).value;
        const double d0 = dist_norm(QExpansion{p, coeffs}, {q, 0.5, NormSign::Distribution}).value;
        const double d1 = dist_norm(QExpansion{p, coeffs}, {q + 1, 0.5, NormSign::Distribution}).value;
        if (t1 < t0 || d1 > d0) ++violations;
      }
    }
    return violations;
  });
  s.check("hs_embedding_geometric", 1e-15, [&] {
    return std::max(std::fabs(hs_embedding_norm(3, 2) - 2.0), std::fabs(hs_embedding_norm(4, 2) - 4.0 / 3.0));
  });
  s.check("seminorm_exp_series_e", 1e-12, [&] {
    TaylorSeries u{{}, kInf};
    double t = 1.0;
    for (unsigned n = 0; n < 25; ++n) {
      u.coeffs.push_back(t);
      t /= n + 1;
    }
    return std::fabs(seminorm_series(u, 0, 0.0, NormSign::Test).value - std::exp(1.0));
  });
  s.check("entire_norm_exp_type1", 1e-12, [&] {
    TaylorSeries u{wick_exp_coeffs(1.0, 80), kInf};
    const NormResult r = entire_type_norm(u, 0, 1.0, {0.0, 1.0, 2.0, 4.0, 8.0});
    return std::fabs(r.value - 1.0);
  });
  s.check("delta_z_dist_norm_decreasing_in_q", 0.0, [&] {
    const MomentCache cache(p, 16);
    const PolyFamily c = gen_appell_family(p, 14, cache);
    const QExpansion d = delta_z(Complex{1.5, 0.0}, c, 14);
    double violations = 0;
    for (unsigned q = 0; q < 8; ++q) {
      const double a = dist_norm(d, {q, 1.0, NormSign::Distribution}).value;
      const double b = dist_norm(d, {q + 1, 1.0, NormSign::Distribution}).value;
      if (!(std::isfinite(a) && b <= a)) ++violations;
    }
    return violations;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"measure", "polynomials", "system", "wick", "spaces"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const FpmParams& params, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;
  if (suite == "measure") {
    measure_suite(params, rng, out);
  } else if (suite == "polynomials") {
    polynomials_suite(params, rng, out);
  } else if (suite == "system") {
    system_suite(params, rng, out);
  } else if (suite == "wick") {
    wick_suite(params, rng, out);
  } else if (suite == "spaces") {
    spaces_suite(params, rng, out);
  } else {
    throw ArgumentError("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace fpa
