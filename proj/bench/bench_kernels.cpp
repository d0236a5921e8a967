#include <benchmark/benchmark.h>

#include "fpa/kernels.hpp"

using namespace fpa;

namespace {

const FpmParams kP(2.0, 0.5);

void BM_PmfBlock(benchmark::State& state) {
  const unsigned k_end = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_block(kP, 0, k_end));
}

void BM_PmfBlockSerial(benchmark::State& state) {
  const unsigned k_end = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_block_serial(kP, 0, k_end));
}

void BM_Gram(benchmark::State& state) {
  const MomentCache cache(kP, 24);
  const PolyFamily c = gen_appell_family(kP, static_cast<unsigned>(state.range(0)), cache);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(c, cache, PairingRoute::StirlingSeries));
}

void BM_GramSerial(benchmark::State& state) {
  const MomentCache cache(kP, 24);
  const PolyFamily c = gen_appell_family(kP, static_cast<unsigned>(state.range(0)), cache);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_serial(c, cache, PairingRoute::StirlingSeries));
}

TaylorSeries exp_series() {
  TaylorSeries u{{}, 1e9};
  double t = 1.0;
  for (unsigned n = 0; n < 120; ++n, t /= n) u.coeffs.emplace_back(t, 0.0);
  return u;
}

std::vector<double> radii(int n) {
  std::vector<double> r;
  for (int i = 0; i < n; ++i) r.push_back(0.25 * i);
  return r;
}

void BM_RadialMax(benchmark::State& state) {
  const auto u = exp_series();
  const auto r = radii(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_radial_max(u, 0, 1.0, r));
}

void BM_RadialMaxSerial(benchmark::State& state) {
  const auto u = exp_series();
  const auto r = radii(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_radial_max_serial(u, 0, 1.0, r));
}

}  // namespace

BENCHMARK(BM_PmfBlock)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PmfBlockSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gram)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadialMax)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RadialMaxSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
