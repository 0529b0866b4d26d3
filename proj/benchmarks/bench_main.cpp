#include <benchmark/benchmark.h>

#include <random>

#include "modcanon/cm.hpp"
#include "modcanon/construction.hpp"
#include "modcanon/cover.hpp"
#include "modcanon/oracle.hpp"
#include "modcanon/pattern.hpp"

using namespace modcanon;

namespace {

void BM_GreedyPow2(benchmark::State& state) {
  const uint32_t k = static_cast<uint32_t>(state.range(0));
  const RhythmicPattern tile = pow2_tile(k);
  const uint64_t max_n = predicted_counts(k).n;
  for (auto _ : state) {
    auto outcome = greedy_tile(tile, PrimeModulus(2), max_n);
    benchmark::DoNotOptimize(outcome);
  }
  state.SetComplexityN(static_cast<int64_t>(max_n));
}
BENCHMARK(BM_GreedyPow2)->DenseRange(4, 10)->Complexity();

void BM_EntrySchedule(benchmark::State& state) {
  const uint32_t k = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    auto t = entry_schedule(k);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_EntrySchedule)->DenseRange(4, 12);

void BM_PolyMulGf2(benchmark::State& state) {
  const size_t degree = static_cast<size_t>(state.range(0));
  std::mt19937 rng(99);
  std::vector<uint32_t> a(degree + 1), b(degree + 1);
  for (auto& c : a) c = rng() & 1u;
  for (auto& c : b) c = rng() & 1u;
  a.back() = b.back() = 1;
  const PrimeModulus two(2);
  const FpPoly pa(two, a), pb(two, b);
  for (auto _ : state) {
    auto product = poly_mul(pa, pb);
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_PolyMulGf2)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

void BM_Census(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    auto pairs = brute_all_tilings(n);
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_Census)->Arg(24)->Arg(30)->Arg(36);

void BM_CyclotomicProfile(benchmark::State& state) {
  const RhythmicPattern tile({0, 1, 4, 5, 12, 13, 16, 17, 28, 29, 32, 33});
  for (auto _ : state) {
    auto profile = cyclotomic_profile(tile);
    benchmark::DoNotOptimize(profile);
  }
}
BENCHMARK(BM_CyclotomicProfile);

} // namespace

BENCHMARK_MAIN();
