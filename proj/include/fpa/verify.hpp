#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpa/measure.hpp"

namespace fpa {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// measure, polynomials, system, wick, spaces.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite at (lambda, beta). Random inputs come from a
/// mt19937_64 seeded with `seed`. A check that throws is reported as failed
/// with an infinite residual.
std::vector<CheckResult> run_suite(const std::string& suite, const FpmParams& params,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace fpa
