// SPDX-License-Identifier: Apache-2.0
//
// Engine timings: the closed form against both oracles, and each OpenMP
// kernel against its serial reference.

#include <benchmark/benchmark.h>

#include <vector>

#include "ramcong/arith.hpp"
#include "ramcong/congruence.hpp"
#include "ramcong/oracle.hpp"

namespace {

using ramcong::CongruenceInstance;

// k unknowns cycling through the divisors of n, target b = 1.
CongruenceInstance make_instance(std::int64_t n, int s, std::int64_t k) {
  const auto ds = ramcong::divisors(n);
  CongruenceInstance inst{n, s, 1, {}};
  for (std::int64_t i = 0; i < k; ++i) inst.restrictions.push_back(ds[static_cast<std::size_t>(i) % ds.size()]);
  return inst;
}

void BM_Formula(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), static_cast<int>(state.range(1)), state.range(2));
  for (auto _ : state) {
    ramcong::RamanujanCache cache;
    benchmark::DoNotOptimize(ramcong::count_restricted(inst, cache));
  }
}

void BM_ConvolutionParallel(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), static_cast<int>(state.range(1)), state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ramcong::convolution_count(inst));
}

void BM_ConvolutionSerial(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), static_cast<int>(state.range(1)), state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ramcong::convolution_count_serial(inst));
}

void BM_BruteParallel(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), static_cast<int>(state.range(1)), state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ramcong::brute_force_count(inst));
}

void BM_BruteSerial(benchmark::State& state) {
  const auto inst = make_instance(state.range(0), static_cast<int>(state.range(1)), state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ramcong::brute_force_count_serial(inst));
}

void FullGrid(benchmark::internal::Benchmark* b) {
  for (const std::int64_t n : {4, 8, 16}) {
    for (const std::int64_t s : {1, 2}) {
      for (const std::int64_t k : {2, 4, 8}) b->Args({n, s, k});
    }
  }
}

// Tuple spaces that stay within the brute-force budget.
void BruteGrid(benchmark::internal::Benchmark* b) {
  b->Args({4, 2, 4});
  b->Args({8, 1, 4});
  b->Args({8, 2, 3});
  b->Args({16, 1, 4});
  b->Args({16, 2, 2});
}

BENCHMARK(BM_Formula)->Apply(FullGrid);
BENCHMARK(BM_ConvolutionParallel)->Apply(FullGrid);
BENCHMARK(BM_ConvolutionSerial)->Apply(FullGrid);
BENCHMARK(BM_BruteParallel)->Apply(BruteGrid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->Apply(BruteGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
