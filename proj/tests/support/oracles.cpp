#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

namespace {

using Hp = boost::multiprecision::cpp_dec_float_100;

unsigned cycles(const std::vector<unsigned>& perm) {
  std::vector<bool> seen(perm.size(), false);
  unsigned count = 0;
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return count;
}

// Calls f(labels, blocks) for each restricted growth string of length n.
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&, unsigned)>& f) {
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      f(a, blocks);
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

std::int64_t signed_cycle_count(unsigned n, unsigned k) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::int64_t count = 0;
  do {
    if (cycles(perm) == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (n - k) % 2 == 0 ? count : -count;
}

std::int64_t set_partition_count(unsigned n, unsigned k) {
  std::int64_t count = 0;
  for_each_partition(n, [&](const std::vector<unsigned>&, unsigned blocks) {
    if (blocks == k) ++count;
  });
  return count;
}

Complex bell_by_partitions(unsigned n, unsigned k, const std::vector<Complex>& x) {
  Complex total = 0.0;
  for_each_partition(n, [&](const std::vector<unsigned>& labels, unsigned blocks) {
    if (blocks != k) return;
    std::vector<unsigned> sizes(blocks, 0);
    for (unsigned l : labels) ++sizes[l];
    Complex prod = 1.0;
    for (unsigned s : sizes) prod *= x.at(s - 1);
    total += prod;
  });
  return total;
}

namespace {

Hp ml_derivative_series(const Hp& beta, unsigned k, const Hp& x) {
  // sum_{n>=k} n!/(n-k)! x^(n-k) / Gamma(beta n + 1)
  Hp sum = 0;
  Hp falling = 1;
  for (unsigned j = 1; j <= k; ++j) falling *= j;
  Hp power = 1;
  unsigned small_run = 0;
  for (unsigned n = k; n < 20000; ++n) {
    const Hp term = falling * power / boost::math::tgamma(beta * n + 1);
    sum += term;
    if (n > k + 10 && abs(term) < 1e-60 * (abs(sum) + 1e-300)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    falling = falling * (n + 1) / (n + 1 - k);
    power *= x;
  }
  return sum;
}

}  // namespace

double ml_derivative_hp(double beta, unsigned k, double x) {
  return static_cast<double>(ml_derivative_series(Hp(beta), k, Hp(x)));
}

double pmf_hp(double lambda, double beta, unsigned k) {
  Hp l(lambda);
  Hp scale = 1;
  for (unsigned j = 1; j <= k; ++j) scale = scale * l / j;
  return static_cast<double>(scale * ml_derivative_series(Hp(beta), k, -l));
}

double moment_hp(double lambda, double beta, unsigned n) {
  double sum = 0.0;
  for (unsigned k = 0; k < 2000; ++k) {
    const double term = std::pow(static_cast<double>(k), static_cast<double>(n)) * pmf_hp(lambda, beta, k);
    sum += term;
    if (k > 8 && term < 1e-22 * sum) break;
  }
  return sum;
}

Complex naive_eval(const std::vector<Complex>& c, Complex z) {
  Complex sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * std::pow(z, static_cast<double>(j));
  return sum;
}

}  // namespace oracle
