#include <gtest/gtest.h>

#include <random>

#include "fpa/combinatorics.hpp"
#include "support/oracles.hpp"

using namespace fpa;

// Frozen from the enumeration oracles below.
constexpr long long kStirlingFirst42 = 11;
constexpr long long kStirlingSecond42 = 7;

TEST(Stirling, EnumerationOracleValuesAreFrozen) {
  EXPECT_EQ(oracle::signed_cycle_count(4, 2), kStirlingFirst42);
  EXPECT_EQ(oracle::set_partition_count(4, 2), kStirlingSecond42);
}

TEST(Stirling, BaseCases) {
  EXPECT_EQ(stirling_first(0, 0), 1);
  EXPECT_EQ(stirling_second(0, 0), 1);
  EXPECT_EQ(stirling_first(3, 5), 0);
  EXPECT_EQ(stirling_second(3, 5), 0);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(stirling_second(n, 1), 1);
  EXPECT_EQ(stirling_first(4, 2), kStirlingFirst42);
  EXPECT_EQ(stirling_second(4, 2), kStirlingSecond42);
}

TEST(Stirling, MatchesEnumerationUpToSeven) {
  for (unsigned n = 0; n <= 7; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling_first(n, k), oracle::signed_cycle_count(n, k)) << n << "," << k;
      EXPECT_EQ(stirling_second(n, k), oracle::set_partition_count(n, k)) << n << "," << k;
    }
  }
}

TEST(Stirling, OrthogonalityExactToThirty) {
  const auto t = shared_stirling(30);
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= 30; ++k) {
      BigInt a = 0;
      BigInt b = 0;
      for (unsigned j = 0; j <= 30; ++j) {
        a += t->first(n, j) * t->second(j, k);
        b += t->second(n, j) * t->first(j, k);
      }
      EXPECT_EQ(a, n == k ? 1 : 0);
      EXPECT_EQ(b, n == k ? 1 : 0);
    }
  }
}

TEST(Stirling, SharedTableGrows) {
  const auto small = shared_stirling(5);
  const auto big = shared_stirling(100);
  EXPECT_GE(big->n_max(), 100u);
  EXPECT_EQ(small->first(4, 2), big->first(4, 2));
  EXPECT_THROW((void)big->first(big->n_max() + 1, 0), ArgumentError);
}

TEST(Bell, TrivialCases) {
  EXPECT_EQ(bell_partial(0, 0, std::span<const Complex>{}), Complex(1.0));
  const std::vector<Complex> x{2.5};
  EXPECT_NEAR(std::abs(bell_partial(6, 6, x) - std::pow(2.5, 6)), 0.0, 1e-12);
}

TEST(Bell, OnesGiveStirlingSecond) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const std::vector<Complex> ones(n - k + 1, 1.0);
      EXPECT_DOUBLE_EQ(bell_partial(n, k, ones).real(), stirling_second(n, k).convert_to<double>());
    }
  }
}

TEST(Bell, MatchesSetPartitionSum) {
  std::mt19937_64 rng(7);
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto x = oracle::random_vector(rng, n, 1.0);
      const std::vector<Complex> args(x.begin(), x.begin() + (n - k + 1));
      const Complex want = oracle::bell_by_partitions(n, k, x);
      EXPECT_LT(std::abs(bell_partial(n, k, args) - want), 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(Bell, WrongArgumentCountThrows) {
  const std::vector<Complex> x{1.0, 2.0};
  EXPECT_THROW(bell_partial(5, 2, x), ArgumentError);
}

TEST(FallingFactorial, Values) {
  EXPECT_EQ(falling_factorial(Complex(7.5, 1.0), 0), Complex(1.0));
  EXPECT_EQ(falling_factorial(3.0, 3), Complex(6.0));
  EXPECT_EQ(falling_factorial(3.0, 4), Complex(0.0));
}

TEST(FallingFactorial, CoefficientsAreStirlingFirst) {
  // Recover the coefficients of (z)_n by interpolating at 0..n.
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = j + 1; i-- > 0;) c[i + 1] += c[i], c[i] *= -static_cast<double>(j);
    }
    for (unsigned k = 0; k <= n; ++k) EXPECT_DOUBLE_EQ(c[k], stirling_first(n, k).convert_to<double>());
    for (double z : {-1.5, 0.25, 4.0}) {
      double direct = 0.0;
      for (unsigned k = 0; k <= n; ++k) direct += c[k] * std::pow(z, k);
      EXPECT_NEAR(falling_factorial(z, n).real(), direct, 1e-9 * std::max(1.0, std::fabs(direct)));
    }
  }
}

TEST(Factorials, Values) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(10), 3628800.0);
  EXPECT_EQ(binomial(10, 3), 120.0);
  EXPECT_EQ(binomial(3, 10), 0.0);
  EXPECT_EQ(factorial_real(25), Real("15511210043330985984000000"));
}
