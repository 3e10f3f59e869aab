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

#include "oracles.hpp"
#include "rankinglp/backends.hpp"
#include "rankinglp/errors.hpp"
#include "rankinglp/exact.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/search.hpp"

using namespace rankinglp;

namespace {

std::vector<int> vals(const MonotonePath& p) {
  return {p.values().begin(), p.values().end()};
}

std::vector<std::pair<double, std::size_t>> trace(const SearchReport& r) {
  std::vector<std::pair<double, std::size_t>> out;
  for (const auto& h : r.history) out.emplace_back(h.gamma, h.set_size);
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("search from all pairs ends at the exact value") {
  HighsBackend highs;
  for (int d = 1; d <= 3; ++d) {
    const GridDims dims{d, d};
    const double exact = solve_upper_exact(dims, highs).gamma;
    const SearchReport r =
        local_search_upper(initial_state(ConstraintSet::all_pairs(dims)), highs);
    CHECK(r.gamma_star == doctest::Approx(exact).epsilon(1e-9));
    REQUIRE(r.history.size() >= 1);
    CHECK(r.history.front().gamma == doctest::Approx(exact).epsilon(1e-9));
    CHECK(r.stop == StopReason::kConverged);
  }
}

TEST_CASE("every upper iterate is a valid bound") {
  HighsBackend highs;
  std::mt19937_64 rng(19);
  for (GridDims dims : {GridDims{2, 2}, GridDims{3, 3}, GridDims{4, 4}, GridDims{5, 5}}) {
    CAPTURE(dims.to_string());
    const double exact = solve_upper_exact(dims, highs).gamma;
    const auto pairs = enumerate_dominant_pairs(dims);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<PathPair> start;
      for (int k = 0; k < 3; ++k) start.push_back(pairs[rng() % pairs.size()]);
      const SearchReport r = local_search_upper(
          initial_state(ConstraintSet::of_pairs(dims, start)), highs);
      for (const auto& h : r.history) CHECK(h.gamma >= exact - 1e-7);
      // The final grid is feasible for every member of its own set.
      CHECK(evaluate_set(r.set, r.grid) >= r.gamma_star - 1e-6);
      CHECK(r.gamma_star >= exact - 1e-7);
    }
  }
}

TEST_CASE("lower search on (1,1) picks up the missing path") {
  HighsBackend highs;
  const GridDims d{1, 1};
  const SearchReport r = local_search_lower(
      initial_state(ConstraintSet::of_paths(d, {MonotonePath(d, {1, 1})})), highs);
  CHECK(r.gamma_star == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(r.set.contains(MonotonePath(d, {0, 1})));
  CHECK(r.history.front().gamma == doctest::Approx(1.0));
}

TEST_CASE("lower search from all paths matches the exact value") {
  HighsBackend highs;
  for (int d = 1; d <= 4; ++d) {
    const GridDims dims{d, d};
    const double exact = solve_lower_exact(dims, highs).gamma;
    const SearchReport r =
        local_search_lower(initial_state(ConstraintSet::all_paths(dims)), highs);
    CHECK(r.gamma_star == doctest::Approx(exact).epsilon(1e-7));
    const Certificate c = certify_lower(r.grid);
    CHECK(c.complete);
    CHECK(c.value == doctest::Approx(r.gamma_star).epsilon(1e-6));
  }
}

TEST_CASE("certificates") {
  HighsBackend highs;
  const ExactResult two = solve_lower_exact({2, 2}, highs);
  const Certificate c = certify_lower(two.grid);
  CHECK(c.complete);
  CHECK(c.total == 6);
  CHECK(c.evaluated == 6);
  CHECK(c.value == doctest::Approx(0.625).epsilon(1e-6));

  const Certificate zero = certify_lower(PriceGrid({1, 1}));
  CHECK(zero.value == doctest::Approx(0.0));
  REQUIRE(zero.argmin.has_value());
  CHECK(vals(*zero.argmin) == std::vector<int>{1, 1});

  const Certificate partial = certify_lower(two.grid, 2);
  CHECK_FALSE(partial.complete);
  CHECK(partial.evaluated == 2);
}

TEST_CASE("certificates never exceed the exact lower value") {
  HighsBackend highs;
  std::mt19937_64 rng(23);
  for (GridDims d : {GridDims{2, 2}, GridDims{3, 3}}) {
    const double exact = solve_lower_exact(d, highs).gamma;
    for (int t = 0; t < 100; ++t) {
      const PriceGrid g = random_price_grid(d, rng);
      const Certificate c = certify_lower(g);
      CHECK(c.value <= exact + 1e-9);
      double brute = 1e9;
      for (const auto& b : oracle::brute_paths(d.m(), d.n())) {
        brute = std::min(brute, oracle::lower_value(g, b));
      }
      CHECK(c.value == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("warm start") {
  const auto single = ConstraintSet::of_pairs({1, 1}, {PathPair::parse("1,1|0,1")});
  const ConstraintSet up = warm_start(single);
  REQUIRE(up.size() == 1);
  CHECK(up.pairs()[0] == PathPair::parse("2,2,2|0,0,2"));
  CHECK(up.dims() == GridDims{2, 2});

  HighsBackend highs;
  const ExactResult five = solve_upper_exact({3, 3}, highs);
  const ConstraintSet ten = warm_start(five.binding, {6, 6});
  CHECK(ten.dims() == GridDims{6, 6});
  CHECK(ten.size() <= five.binding.size());
  const ConstraintSet seven = warm_start(five.binding, {5, 5});
  CHECK(seven.dims() == GridDims{5, 5});
}

TEST_CASE("searches are deterministic and resumable") {
  HighsBackend highs;
  const GridDims dims{6, 6};
  const auto start = warm_start(solve_upper_exact({3, 3}, highs).binding, dims);
  SearchOptions opt;
  opt.threads = 2;
  std::vector<SearchState> states;
  const SearchReport a = local_search_upper(
      initial_state(start, opt), highs, opt,
      [&](const SearchCheckpoint& c) { states.push_back(c.resume); });
  const SearchReport b = local_search_upper(initial_state(start, opt), highs, opt);
  CHECK(trace(a) == trace(b));
  CHECK(a.set == b.set);
  REQUIRE(states.size() >= 2);

  const SearchState& mid = states[states.size() / 2];
  const SearchReport c = local_search_upper(mid, highs, opt);
  CHECK(c.gamma_star == a.gamma_star);
  CHECK(trace(c) == trace(a));
}

TEST_CASE("search options are validated") {
  SearchOptions bad;
  bad.add_threshold = 1e-12;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  HighsBackend highs;
  CHECK_THROWS_AS(
      local_search_upper(initial_state(ConstraintSet::all_paths({2, 2})), highs),
      InvalidArgument);
}

}  // TEST_SUITE
