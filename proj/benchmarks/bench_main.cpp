// Copyright 2026 The ifsquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "ifsquant/ifsquant.hpp"

namespace {

void BM_OptimalSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::optimal_set(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalSet)->RangeMultiplier(10)->Range(10, 100000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CountOptimalSets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::count_optimal_sets(n));
}
BENCHMARK(BM_CountOptimalSets)->Arg(40)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::enumerate_optimal_sets(n));
}
BENCHMARK(BM_Enumerate)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_ValidateStructure(benchmark::State& state) {
  const auto q = ifsq::optimal_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::validate_structure(q));
}
BENCHMARK(BM_ValidateStructure)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::oracle::sample(count, ifsq::oracle::kDefaultDepth, 1, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_KMeansExact(benchmark::State& state) {
  const auto batch = ifsq::oracle::sample(100000, ifsq::oracle::kDefaultDepth, 1, 1);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::oracle::kmeans_1d_exact(batch, k));
}
BENCHMARK(BM_KMeansExact)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Exhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ifsq::oracle::exhaustive_min(n));
}
BENCHMARK(BM_Exhaustive)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
