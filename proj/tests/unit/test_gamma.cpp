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
#include "rankinglp/gamma.hpp"
#include "rankinglp/verification.hpp"

using namespace rankinglp;

namespace {

PriceGrid one_by_one(double c) {
  PriceGrid g({1, 1});
  g.set(0, 0, c);
  return g;
}

std::vector<int> vals(const MonotonePath& p) {
  return {p.values().begin(), p.values().end()};
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("lower bracket by hand") {
  const GridDims d{1, 1};
  CHECK(lower_bracket(one_by_one(0.5), MonotonePath(d, {0, 1}), 0, 0) ==
        doctest::Approx(0.5));
  CHECK(lower_bracket(one_by_one(0.3), MonotonePath(d, {0, 1}), 0, 1) ==
        doctest::Approx(1.0));
  CHECK(lower_bracket(one_by_one(0.3), MonotonePath(d, {1, 1}), 0, 1) ==
        doctest::Approx(1.0));
}

TEST_CASE("lower expression by hand") {
  const GridDims d{1, 1};
  CHECK(eval_lower(one_by_one(0.5), MonotonePath(d, {0, 1})) == doctest::Approx(0.5));
  CHECK(eval_lower(one_by_one(0.5), MonotonePath(d, {1, 1})) == doctest::Approx(0.5));
}

TEST_CASE("lower expression on the top path at a boundary-only grid") {
  for (GridDims d : {GridDims{2, 3}, GridDims{3, 2}, GridDims{4, 4}}) {
    const PriceGrid g(d);
    const MonotonePath top = MonotonePath::top(d);
    CHECK(eval_lower(g, top) == doctest::Approx(oracle::lower_value(g, vals(top))));
  }
}

TEST_CASE("upper expression by hand") {
  const GridDims d{1, 1};
  for (double c : {0.0, 0.4, 1.0}) {
    const PriceGrid g = one_by_one(c);
    CHECK(eval_upper(g, PathPair::parse("1,1|0,1")) == doctest::Approx(1.0));
    // Printed as 2, counting the corner g(1,1) in the last sum. That corner
    // is at the right edge, where the price is 0; the upper LP optimum only
    // reproduces the reference table with it left out.
    CHECK(eval_upper(g, PathPair::parse("0,1|0,1")) == doctest::Approx(1.0));
    CHECK(eval_upper(g, PathPair::parse("1,1|1,1")) == doctest::Approx(1.0));
  }
}

TEST_CASE("exact objective by hand") {
  const GammaBreakdown r = gamma_exact(one_by_one(0.37), PathPair::parse("1,1|0,1"));
  CHECK(r.match_term == doctest::Approx(1.0));
  CHECK(r.u_term == doctest::Approx(0.0));
  CHECK(r.v_early_term == doctest::Approx(0.0));
  CHECK(r.v_late_term == doctest::Approx(0.0));
  CHECK(r.total == doctest::Approx(1.0));
}

TEST_CASE("evaluators agree with the oracle sums") {
  std::mt19937_64 rng(7);
  for (GridDims d : {GridDims{2, 2}, GridDims{3, 4}, GridDims{4, 3}}) {
    for (int t = 0; t < 200; ++t) {
      const PriceGrid g = random_price_grid(d, rng);
      const PathPair p = random_dominant_pair(d, rng);
      CHECK(eval_lower(g, p.b()) == doctest::Approx(oracle::lower_value(g, vals(p.b()))).epsilon(1e-12));
      CHECK(eval_upper(g, p) == doctest::Approx(oracle::upper_value(g, vals(p.a()), vals(p.b()))).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact objective agrees with midpoint integration") {
  std::mt19937_64 rng(11);
  for (GridDims d : {GridDims{1, 1}, GridDims{2, 3}, GridDims{3, 2}, GridDims{4, 4}}) {
    for (int t = 0; t < 100; ++t) {
      const PriceGrid g = random_price_grid(d, rng);
      const PathPair p = random_dominant_pair(d, rng);
      const GammaBreakdown r = gamma_exact(g, p);
      const oracle::Integrals o = oracle::integrate_objective(g, vals(p.a()), vals(p.b()));
      CHECK(r.match_term == doctest::Approx(o.match).epsilon(1e-9));
      CHECK(r.u_term == doctest::Approx(o.u_gain).epsilon(1e-9));
      CHECK(r.v_early_term == doctest::Approx(o.v_early).epsilon(1e-9));
      CHECK(r.v_late_term == doctest::Approx(o.v_late).epsilon(1e-9));
      CHECK(r.total == doctest::Approx(o.total()).epsilon(1e-9));
    }
  }
}

TEST_CASE("sandwich on random inputs") {
  std::mt19937_64 rng(3);
  for (GridDims d : {GridDims{3, 3}, GridDims{2, 5}, GridDims{5, 2}}) {
    for (int t = 0; t < 300; ++t) {
      const PriceGrid g = random_price_grid(d, rng);
      const PathPair p = random_dominant_pair(d, rng);
      const double exact = gamma_exact(g, p).total;
      CHECK(eval_lower(g, p.b()) <= exact + 1e-9);
      CHECK(exact <= eval_upper(g, p) + 1e-9);
    }
  }
  CHECK(run_sandwich_suite(5, 50, default_sandwich_grids()).passed());
}

}  // TEST_SUITE
