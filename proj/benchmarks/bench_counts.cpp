#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "normcount/factorint.hpp"
#include "normcount/groupcount.hpp"
#include "normcount/inverse.hpp"
#include "normcount/sieve.hpp"

using namespace normcount;
using u64 = std::uint64_t;

static void BM_SieveFromOne(benchmark::State &state) {
  const u64 hi = state.range(0);
  for (auto _ : state) {
    u64 checksum = 0;
    sieve_counts(1, hi, [&](u64 n, u64 a, u64 h) { checksum ^= (a + h) * n; });
    benchmark::DoNotOptimize(checksum);
  }
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_SieveFromOne)->Arg(1'000'000)->Arg(10'000'000);

static void BM_SieveWindowAt1e9(benchmark::State &state) {
  const u64 lo = 1'000'000'000, width = state.range(0);
  for (auto _ : state) {
    u64 checksum = 0;
    sieve_counts(lo, lo + width - 1, [&](u64, u64 a, u64 h) { checksum += a + h; });
    benchmark::DoNotOptimize(checksum);
  }
  state.SetItemsProcessed(state.iterations() * width);
}
BENCHMARK(BM_SieveWindowAt1e9)->Arg(1 << 16)->Arg(1 << 20);

static void BM_CumulativeW(benchmark::State &state) {
  const u64 n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cumulative(SequenceKind::W, n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_CumulativeW)->Arg(1'000'000)->Arg(10'000'000);

static void BM_Factorize64(benchmark::State &state) {
  std::mt19937_64 rng(99);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(rng() | 1));
}
BENCHMARK(BM_Factorize64);

static void BM_CountNormalPoint(benchmark::State &state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(1, 10'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(count_normal(dist(rng)));
}
BENCHMARK(BM_CountNormalPoint);

static void BM_SmallestAbelianIndex(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(smallest_abelian_index(48));
}
BENCHMARK(BM_SmallestAbelianIndex);

BENCHMARK_MAIN();
