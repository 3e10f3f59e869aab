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

#include <set>

#include "oracles.hpp"
#include "rankinglp/errors.hpp"
#include "rankinglp/grid_paths.hpp"

using namespace rankinglp;

namespace {

std::vector<int> vals(const MonotonePath& p) {
  return {p.values().begin(), p.values().end()};
}

std::set<std::vector<int>> as_set(const std::vector<MonotonePath>& paths) {
  std::set<std::vector<int>> out;
  for (const auto& p : paths) out.insert(vals(p));
  return out;
}

}  // namespace

TEST_SUITE("gridpaths") {

TEST_CASE("path counts") {
  CHECK(path_count({2, 2}) == 6);
  CHECK(path_count({11, 12}) == 1352078);
  CHECK(binomial(23, 11) == 1352078);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(enumerate_paths({m, n}).size() == oracle::brute_paths(m, n).size());
    }
  }
}

TEST_CASE("enumeration matches brute force in order") {
  const GridDims dims{3, 4};
  const auto ours = enumerate_paths(dims);
  const auto brute = oracle::brute_paths(3, 4);
  REQUIRE(ours.size() == brute.size());
  for (std::size_t k = 0; k < ours.size(); ++k) {
    CHECK(vals(ours[k]) == brute[k]);
    CHECK(rank_path(ours[k]) == k);
    CHECK(unrank_path(dims, k) == ours[k]);
  }
  PathEnumerator it(dims, 17);
  CHECK(it.current() == ours[17]);
}

TEST_CASE("tiny grid") {
  const auto paths = enumerate_paths({1, 1});
  REQUIRE(paths.size() == 2);
  CHECK(vals(paths[0]) == std::vector<int>{0, 1});
  CHECK(vals(paths[1]) == std::vector<int>{1, 1});
}

TEST_CASE("invalid paths are rejected") {
  CHECK_THROWS_AS(MonotonePath({2, 2}, {1, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(MonotonePath({2, 2}, {0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(MonotonePath({2, 2}, {0, 3, 2}), InvalidArgument);
  CHECK_THROWS_AS(MonotonePath({2, 2}, {0, 2}), InvalidArgument);
  CHECK_THROWS_AS(PathPair(MonotonePath({1, 1}, {0, 1}), MonotonePath({1, 1}, {1, 1})),
                  InvalidArgument);
}

TEST_CASE("inverse vectors") {
  auto inv = [](GridDims d, std::vector<int> b) {
    const InversePath jb = inverse(MonotonePath(d, b));
    return std::vector<int>(jb.values().begin(), jb.values().end());
  };
  CHECK(inv({3, 4}, {4, 4, 4, 4}) == std::vector<int>{0, 0, 0, 0});
  CHECK(inv({3, 4}, {0, 2, 3, 4}) == std::vector<int>{1, 1, 2, 3});
  CHECK(inv({3, 4}, {0, 0, 0, 4}) == std::vector<int>{3, 3, 3, 3});
  for (const auto& b : oracle::brute_paths(3, 3)) {
    const MonotonePath p({3, 3}, b);
    const InversePath jb = inverse(p);
    for (int j = 0; j < 3; ++j) CHECK(jb[j] == oracle::brute_inverse(b, j));
    CHECK(from_inverse({3, 3}, jb) == p);
  }
}

TEST_CASE("neighbors") {
  CHECK(as_set(neighbors(MonotonePath({3, 4}, {0, 2, 3, 4}))) ==
        std::set<std::vector<int>>{
            {1, 2, 3, 4}, {0, 1, 3, 4}, {0, 3, 3, 4}, {0, 2, 2, 4}, {0, 2, 4, 4}});
  CHECK(as_set(neighbors(MonotonePath({2, 2}, {0, 0, 2}))) ==
        std::set<std::vector<int>>{{0, 1, 2}});
  CHECK(as_set(neighbors(MonotonePath({1, 1}, {1, 1}))) ==
        std::set<std::vector<int>>{{0, 1}});
}

TEST_CASE("neighbors agree with a brute-force move filter") {
  for (const auto& b : oracle::brute_paths(3, 3)) {
    std::set<std::vector<int>> expect;
    for (int i = 0; i < 3; ++i) {
      for (int d : {-1, 1}) {
        auto c = b;
        c[static_cast<std::size_t>(i)] += d;
        if (c[static_cast<std::size_t>(i)] < 0) continue;
        if (!std::is_sorted(c.begin(), c.end()) || c.back() != 3) continue;
        expect.insert(c);
      }
    }
    CHECK(as_set(neighbors(MonotonePath({3, 3}, b))) == expect);
  }
}

TEST_CASE("pair perturbations") {
  const auto got = perturb_pairs(PathPair::parse("1,1|0,1"));
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& p : got) seen.insert({vals(p.a()), vals(p.b())});
  CHECK(seen == std::set<std::pair<std::vector<int>, std::vector<int>>>{
                    {{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}});

  const PathPair top(MonotonePath::top({2, 3}), MonotonePath::top({2, 3}));
  std::set<std::vector<int>> b_side;
  for (const auto& p : perturb_pairs(top)) {
    CHECK(p.a() == top.a());
    b_side.insert(vals(p.b()));
  }
  CHECK(b_side == as_set(neighbors(top.b())));
}

TEST_CASE("upscale doubles the grid and keeps the step function") {
  const MonotonePath b({3, 4}, {0, 2, 3, 4});
  const MonotonePath up = upscale(b);
  CHECK(up.dims() == GridDims{6, 8});
  CHECK(vals(up) == std::vector<int>{0, 0, 4, 4, 6, 6, 8});
  for (int k = 0; k < 12 * 4; ++k) {
    const double x = (k + 0.5) / 48.0;
    CHECK(step_value(up, x) == doctest::Approx(step_value(b, x)));
  }
  CHECK(upscale(MonotonePath::top({2, 3})) == MonotonePath::top({4, 6}));
}

TEST_CASE("regrid hits doubling exactly and stays monotone") {
  for (const auto& b : enumerate_paths({2, 3})) {
    CHECK(regrid(b, {4, 6}) == upscale(b));
    const MonotonePath r = regrid(b, {3, 5});
    CHECK(r.dims() == GridDims{3, 5});
  }
  const PathPair pair = PathPair::parse("1,2,2|0,1,2");
  const PathPair r = regrid(pair, {5, 7});
  CHECK(r.dims() == GridDims{5, 7});
}

TEST_CASE("dominant pair count") {
  for (int d = 1; d <= 4; ++d) {
    std::uint64_t brute = 0;
    const auto paths = oracle::brute_paths(d, d);
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        bool dom = true;
        for (std::size_t i = 0; i < a.size(); ++i) dom = dom && a[i] >= b[i];
        brute += dom;
      }
    }
    CHECK(dominant_pair_count({d, d}) == doctest::Approx(static_cast<double>(brute)));
    CHECK(enumerate_dominant_pairs({d, d}).size() == brute);
  }
}

TEST_CASE("parse round trip") {
  const PathPair p = PathPair::parse("1,2,2|0,1,2");
  CHECK(PathPair::parse(p.to_string()) == p);
  CHECK(MonotonePath::parse("0,2,3,4").dims() == GridDims{3, 4});
  CHECK_THROWS_AS(MonotonePath::parse("0,x,4"), InvalidArgument);
}

}  // TEST_SUITE
