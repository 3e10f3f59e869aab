// Copyright 2026 The rankinglp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "rankinglp/backends.hpp"
#include "rankinglp/exact.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/ranksim.hpp"
#include "rankinglp/search.hpp"
#include "rankinglp/verification.hpp"

using namespace rankinglp;

static void BM_StreamPaths(benchmark::State& state) {
  const GridDims dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_path(dims, [&](const MonotonePath&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_StreamPaths)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_EvalUpper(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const PriceGrid g = random_price_grid({d, d}, rng);
  const PathPair p = random_dominant_pair({d, d}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_upper(g, p));
}
BENCHMARK(BM_EvalUpper)->Arg(5)->Arg(10)->Arg(20);

static void BM_EvalLower(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const PriceGrid g = random_price_grid({d, d}, rng);
  const MonotonePath b = random_dominant_pair({d, d}, rng).b();
  for (auto _ : state) benchmark::DoNotOptimize(eval_lower(g, b));
}
BENCHMARK(BM_EvalLower)->Arg(5)->Arg(10)->Arg(20);

static void BM_BuildUpperFull(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_upper_lp_full({d, d}));
}
BENCHMARK(BM_BuildUpperFull)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_LowerExact(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  HighsBackend highs;
  for (auto _ : state) benchmark::DoNotOptimize(solve_lower_exact({d, d}, highs).gamma);
}
BENCHMARK(BM_LowerExact)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_UpperExact(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  HighsBackend highs;
  for (auto _ : state) benchmark::DoNotOptimize(solve_upper_exact({d, d}, highs).gamma);
}
BENCHMARK(BM_UpperExact)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CertifyLower(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const PriceGrid g = random_price_grid({d, d}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(certify_lower(g).value);
}
BENCHMARK(BM_CertifyLower)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_UpperSearch(benchmark::State& state) {
  HighsBackend highs;
  const ConstraintSet start = warm_start(solve_upper_exact({5, 5}, highs).binding, {7, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_search_upper(initial_state(start), highs).gamma_star);
  }
}
BENCHMARK(BM_UpperSearch)->Unit(benchmark::kMillisecond);

static void BM_ExtractThresholds(benchmark::State& state) {
  RandomInstanceParams params;
  params.dims = {4, 4};
  params.edge_probability = 0.6;
  const BipartiteInstance inst = random_instance(params, 17);
  std::mt19937_64 rng(4);
  const PriceGrid g = random_price_grid(params.dims, rng);
  const Edge e = inst.edges.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_thresholds(inst, e.online, e.offline, g).alpha);
  }
}
BENCHMARK(BM_ExtractThresholds);

static void BM_WitnessRoundTrip(benchmark::State& state) {
  const GridDims dims{4, 4};
  std::mt19937_64 rng(5);
  const PriceGrid g = random_price_grid(dims, rng);
  const PathPair pair = PathPair::parse("2,3,4,4,4|0,1,1,3,4");
  for (auto _ : state) {
    const Witness w = build_witness(pair, g);
    benchmark::DoNotOptimize(extract_thresholds(w.instance, w.u, w.v, g).beta);
  }
}
BENCHMARK(BM_WitnessRoundTrip);

BENCHMARK_MAIN();
