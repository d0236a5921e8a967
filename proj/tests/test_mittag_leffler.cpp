#include <gtest/gtest.h>

#include <cmath>

#include "fpa/mittag_leffler.hpp"
#include "support/oracles.hpp"

using namespace fpa;

// 100-digit series values.
constexpr double kE05AtMinus1 = 0.427583576155807;
constexpr double kE05SecondAtMinus07 = 0.5029533019700686;

TEST(MittagLeffler, OracleValuesAreFrozen) {
  EXPECT_NEAR(oracle::ml_derivative_hp(0.5, 0, -1.0), kE05AtMinus1, 1e-15);
  EXPECT_NEAR(oracle::ml_derivative_hp(0.5, 2, -0.7), kE05SecondAtMinus07, 1e-15);
}

TEST(MittagLeffler, ZeroArgument) {
  for (double beta : {0.1, 0.5, 1.0}) EXPECT_EQ(ml_eval(beta, 0.0), Complex(1.0));
  EXPECT_EQ(ml_derivative(0.3, 0, 0.0), Complex(1.0));
}

TEST(MittagLeffler, BetaOneIsExp) {
  for (double r : {-10.0, -3.0, 0.5, 4.0, 10.0}) {
    for (double im : {0.0, 2.0}) {
      const Complex z{r, im};
      EXPECT_LT(std::abs(ml_eval(1.0, z) / std::exp(z) - 1.0), 1e-13);
      for (unsigned k = 1; k <= 4; ++k) EXPECT_LT(std::abs(ml_derivative(1.0, k, z) / std::exp(z) - 1.0), 1e-12);
    }
  }
}

TEST(MittagLeffler, HalfOrderAgainstOracle) {
  EXPECT_NEAR(ml_eval(0.5, -1.0).real(), kE05AtMinus1, 1e-15);
  EXPECT_NEAR(ml_derivative(0.5, 2, -0.7).real(), kE05SecondAtMinus07, 1e-15);
}

TEST(MittagLeffler, HalfOrderClosedForm) {
  // E_{1/2}(-x) = exp(x^2) erfc(x)
  for (double x : {0.1, 0.8, 2.0, 4.0}) {
    EXPECT_NEAR(ml_eval(0.5, -x).real() / (std::exp(x * x) * std::erfc(x)), 1.0, 1e-13);
  }
}

TEST(MittagLeffler, CancellationHeavyArgumentsEscalate) {
  // Terms reach 1e17 at beta = 0.25, x = 3 before cancelling to O(1).
  for (unsigned k : {0u, 3u}) {
    const double want = oracle::ml_derivative_hp(0.25, k, -3.0);
    EXPECT_NEAR(ml_derivative(0.25, k, -3.0, MlConfig{1e-16, 20000}).real(), want, 1e-13 * std::max(1.0, std::fabs(want)));
  }
}

TEST(MittagLeffler, RejectsBadArguments) {
  EXPECT_THROW(ml_eval(0.0, 1.0), ArgumentError);
  EXPECT_THROW(ml_eval(1.5, 1.0), ArgumentError);
  EXPECT_THROW(ml_eval(0.5, 40.0), ConvergenceError);
}

TEST(MittagLeffler, TermBudgetReportsPartialSum) {
  try {
    ml_eval(0.5, -6.0, MlConfig{1e-16, 5});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_TRUE(std::isfinite(e.partial_sum().real()));
  }
}
