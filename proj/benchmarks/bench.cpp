#include <benchmark/benchmark.h>

#include <random>

#include "steinhaus/regularity.hpp"

using steinhaus::BinarySequence;
using steinhaus::SteinhausMatrix;

namespace {

BinarySequence random_sequence(int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BinarySequence s(len);
  for (int t = 0; t < len; ++t) s.set_bit(t, rng() & 1);
  return s;
}

void BM_FromSequence(benchmark::State& state) {
  const BinarySequence s = random_sequence(static_cast<int>(state.range(0)) - 1, 42);
  for (auto _ : state) benchmark::DoNotOptimize(SteinhausMatrix::from_sequence(s));
}
BENCHMARK(BM_FromSequence)->Arg(64)->Arg(512)->Arg(1500);

void BM_Degrees(benchmark::State& state) {
  const SteinhausMatrix m = SteinhausMatrix::from_sequence(
      random_sequence(static_cast<int>(state.range(0)) - 1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(steinhaus::degrees(m));
}
BENCHMARK(BM_Degrees)->Arg(512)->Arg(1500);

void BM_ClosedFormEntry(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SteinhausMatrix m = SteinhausMatrix::from_sequence(random_sequence(n - 1, 9));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        steinhaus::entry_closed_form(m, n / 3, 2 * n / 3, steinhaus::ClosedForm::FirstRow));
}
BENCHMARK(BM_ClosedFormEntry)->Arg(512)->Arg(1500);

void BM_MsSymbolicMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(steinhaus::ms_symbolic_matrix(n));
}
BENCHMARK(BM_MsSymbolicMatrix)->Arg(120)->Arg(300)->Arg(1500)->Unit(benchmark::kMillisecond);

void BM_SearchRegularMod4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(steinhaus::search_regular_mod4(n));
}
BENCHMARK(BM_SearchRegularMod4)->Arg(120)->Arg(300)->Arg(1500)->Unit(benchmark::kMillisecond);

void BM_BruteForceRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(steinhaus::brute_force_regular(n, steinhaus::DegreeParity::Any));
}
BENCHMARK(BM_BruteForceRegular)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
