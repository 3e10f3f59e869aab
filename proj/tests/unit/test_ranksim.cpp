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


#include <doctest.h>

#include <random>

#include "rankinglp/errors.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/ranksim.hpp"
#include "rankinglp/verification.hpp"

using namespace rankinglp;

namespace {

// Strictly increasing in rank and non-increasing in stage.
PriceGrid strict_grid(GridDims d) {
  PriceGrid g(d);
  for (int i = 0; i < d.m(); ++i) {
    for (int j = 0; j < d.n(); ++j) {
      g.set(i, j, (j + 1.0) / (d.n() + 1.0) * (1.0 - 0.1 * i / d.m()));
    }
  }
  return g;
}

BipartiteInstance single_edge(GridDims d, int stage, int rank, double w) {
  BipartiteInstance inst;
  inst.dims = d;
  inst.offline = {{0, w, rank}};
  inst.online = {{0, stage, 0}};
  inst.edges = {{0, 0}};
  return inst;
}

}  // namespace

TEST_SUITE("ranksim") {

TEST_CASE("single edge splits the weight") {
  const GridDims d{3, 3};
  const PriceGrid g = strict_grid(d);
  const DualOutcome r = run_ranking(single_edge(d, 1, 2, 1.0), g);
  CHECK(r.online_match[0] == 0);
  CHECK(r.offline_match[0] == 0);
  CHECK(r.online_dual[0] == doctest::Approx(1.0 - g(1, 2)));
  CHECK(r.offline_dual[0] == doctest::Approx(g(1, 2)));
  CHECK(r.size_weight() == doctest::Approx(1.0));
}

TEST_CASE("lower rank wins under a strictly increasing price") {
  const GridDims d{2, 3};
  BipartiteInstance inst;
  inst.dims = d;
  inst.offline = {{0, 1.0, 2}, {1, 1.0, 0}};
  inst.online = {{0, 0, 0}};
  inst.edges = {{0, 0}, {0, 1}};
  const DualOutcome r = run_ranking(inst, strict_grid(d));
  CHECK(r.online_match[0] == 1);
}

TEST_CASE("empty edge set") {
  const GridDims d{2, 2};
  BipartiteInstance inst;
  inst.dims = d;
  inst.offline = {{0, 1.0, 0}, {1, 1.0, 1}};
  inst.online = {{0, 0, 0}, {1, 1, 1}};
  const DualOutcome r = run_ranking(inst, strict_grid(d));
  for (int x : r.online_match) CHECK(x == -1);
  for (double t : r.online_dual) CHECK(t == 0.0);
  for (double t : r.offline_dual) CHECK(t == 0.0);
}

TEST_CASE("matched edges carry the whole weight") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomInstanceParams params;
    params.dims = {3, 3};
    const BipartiteInstance inst = random_instance(params, seed);
    const PriceGrid g = random_price_grid(params.dims, rng);
    const DualOutcome r = run_ranking(inst, g);
    for (std::size_t u = 0; u < inst.online.size(); ++u) {
      const int v = r.online_match[u];
      if (v < 0) continue;
      CHECK(r.online_dual[u] + r.offline_dual[static_cast<std::size_t>(v)] ==
            doctest::Approx(inst.offline[static_cast<std::size_t>(v)].weight));
    }
  }
}

TEST_CASE("isolated edge thresholds and duals") {
  const GridDims d{3, 4};
  const PriceGrid g = strict_grid(d);
  const BipartiteInstance inst = single_edge(d, 0, 0, 1.0);
  const ThresholdProfile p = extract_thresholds(inst, 0, 0, g);
  CHECK(p.structure_valid);
  CHECK(p.beta_monotone);
  CHECK(p.alpha == std::vector<int>{4, 4, 4});
  CHECK(p.beta == std::vector<int>{0, 0, 0});
  CHECK(expected_duals(inst, 0, 0, g) == doctest::Approx(1.0));
}

TEST_CASE("duals scale with the weights") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomInstanceParams params;
    params.dims = {2, 3};
    params.edge_probability = 0.7;
    BipartiteInstance inst = random_instance(params, seed);
    if (inst.edges.empty()) continue;
    const PriceGrid g = random_price_grid(params.dims, rng);
    const Edge e = inst.edges.front();
    const double base = expected_duals(inst, e.online, e.offline, g);
    for (auto& v : inst.offline) v.weight *= 2.5;
    CHECK(expected_duals(inst, e.online, e.offline, g) == doctest::Approx(2.5 * base));
  }
}

TEST_CASE("witness for a two-stage pair") {
  const GridDims d{2, 2};
  const PathPair pair = PathPair::parse("1,2,2|0,1,2");
  const PriceGrid g = strict_grid(d);
  const Witness w = build_witness(pair, g);
  w.instance.validate();
  CHECK(w.instance.offline.size() + w.instance.online.size() <= 4 * 2 + 2);
  CHECK(w.instance.edges.size() <= 4 * 2 + 1);
  for (const auto& v : w.instance.offline) CHECK(v.weight == 1.0);
  const ThresholdProfile p = extract_thresholds(w.instance, w.u, w.v, g);
  CHECK(p.alpha == std::vector<int>{1, 2});
  CHECK(p.beta == std::vector<int>{0, 1});
}

TEST_CASE("witness for the all-grabbed pair") {
  const GridDims d{3, 3};
  const PathPair pair(MonotonePath::top(d), MonotonePath::top(d));
  const PriceGrid g = strict_grid(d);
  const Witness w = build_witness(pair, g);
  const ThresholdProfile p = extract_thresholds(w.instance, w.u, w.v, g);
  CHECK(p.alpha == std::vector<int>{3, 3, 3});
  CHECK(p.beta == std::vector<int>{3, 3, 3});
}

TEST_CASE("witness round trip and size bound") {
  for (int d = 1; d <= 3; ++d) {
    const GridDims dims{d, d};
    const PriceGrid g = strict_grid(dims);
    for (const PathPair& pair : enumerate_dominant_pairs(dims)) {
      const Witness w = build_witness(pair, g);
      CHECK(w.instance.offline.size() + w.instance.online.size() <=
            static_cast<std::size_t>(4 * d + 2));
      const ThresholdProfile p = extract_thresholds(w.instance, w.u, w.v, g);
      const auto a = pair.a().values();
      const auto b = pair.b().values();
      CHECK(p.alpha == std::vector<int>(a.begin(), a.end() - 1));
      CHECK(p.beta == std::vector<int>(b.begin(), b.end() - 1));
    }
  }
}

TEST_CASE("witness refuses plateaus") {
  const GridDims d{2, 3};
  PriceGrid g(d);
  g.set(0, 0, 0.2);
  g.set(0, 1, 0.2);
  g.set(0, 2, 0.5);
  g.set(1, 0, 0.1);
  g.set(1, 1, 0.2);
  g.set(1, 2, 0.3);
  CHECK_THROWS_AS(build_witness(PathPair::parse("1,2,3|0,1,3"), g), InvalidArgument);
}

TEST_CASE("profiles satisfy the dual inequality") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomInstanceParams params;
    params.dims = {2 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 2)};
    const BipartiteInstance inst = random_instance(params, seed);
    if (inst.edges.empty()) continue;
    const PriceGrid g = random_price_grid(params.dims, rng);
    const Edge e = inst.edges[seed % inst.edges.size()];
    const ThresholdProfile p = extract_thresholds(inst, e.online, e.offline, g);
    REQUIRE(p.structure_valid);
    REQUIRE(p.beta_monotone);
    const double bound = gamma_exact(g, p.alpha, p.beta_path(params.dims)).total *
                         inst.offline[static_cast<std::size_t>(e.offline)].weight;
    CHECK(expected_duals(inst, e.online, e.offline, g) >= bound - 1e-9);
  }
}

TEST_CASE("random instances") {
  RandomInstanceParams params;
  params.dims = {3, 4};
  CHECK(random_instance(params, 0) == random_instance(params, 0));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BipartiteInstance inst = random_instance(params, seed);
    CHECK_NOTHROW(inst.validate());
    CHECK(inst.offline.size() >= 1);
    CHECK(inst.offline.size() <= 6);
    CHECK(inst.online.size() >= 1);
    CHECK(inst.online.size() <= 6);
    for (const auto& v : inst.offline) {
      CHECK(v.rank >= 0);
      CHECK(v.rank < 4);
      CHECK(v.weight > 0);
      CHECK(v.weight <= 1);
    }
    for (const auto& u : inst.online) {
      CHECK(u.stage >= 0);
      CHECK(u.stage < 3);
    }
  }
  params.edge_probability = 0;
  CHECK(random_instance(params, 4).edges.empty());
}

TEST_CASE("suites pass on small seeds") {
  ReplaySuiteParams small;
  small.instances = 300;
  CHECK(run_structure_suite(1, small).passed());
  CHECK(run_dual_bound_suite(1, small).passed());
  CHECK(run_witness_suite(1, 3).passed());
}

}  // TEST_SUITE
