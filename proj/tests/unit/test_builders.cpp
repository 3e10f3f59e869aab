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

#include "model_check.hpp"
#include "rankinglp/backends.hpp"
#include "rankinglp/constraint_set.hpp"
#include "rankinglp/errors.hpp"
#include "rankinglp/lp_builders.hpp"

using namespace rankinglp;

namespace {

double solve_value(const LpProblem& problem) {
  HighsBackend highs;
  const LpSolution sol = highs.solve(problem);
  REQUIRE(sol.optimal());
  return sol.objective;
}

}  // namespace

TEST_SUITE("builders") {

TEST_CASE("coefficients match the oracle expansion up to (3,3)") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const oracle::ModelCheck lower = oracle::check_lower_model({m, n});
      CHECK(lower.ok());
      for (const auto& why : lower.mismatches) MESSAGE(why);
      const oracle::ModelCheck upper = oracle::check_upper_model({m, n});
      CHECK(upper.ok());
      for (const auto& why : upper.mismatches) MESSAGE(why);
    }
  }
}

TEST_CASE("lower model shape at (1,1)") {
  const FamilyLp lp = build_lower_lp({1, 1});
  CHECK(lp.members.size() == 2);
  CHECK(lp.h_columns == 2);
  CHECK(lp.h_rows == 3);
  CHECK(lp.problem.num_variables() == 1 + 1 + 2);
  CHECK(lp.problem.num_constraints() == 2 + 3);
}

TEST_CASE("projected sizes are exact for the full models") {
  for (GridDims d : {GridDims{2, 2}, GridDims{2, 3}, GridDims{3, 3}}) {
    const ModelSize lower = projected_lower_size(d);
    const FamilyLp lp = build_lower_lp(d);
    CHECK(lower.variables == static_cast<std::uint64_t>(lp.problem.num_variables()));
    CHECK(lower.constraints == static_cast<std::uint64_t>(lp.problem.num_constraints()));
    CHECK(lower.nonzeros >= lp.problem.num_nonzeros());
    const ModelSize upper = projected_upper_size(d);
    const FamilyLp up = build_upper_lp_full(d);
    CHECK(upper.variables == static_cast<std::uint64_t>(up.problem.num_variables()));
    CHECK(upper.constraints == static_cast<std::uint64_t>(up.problem.num_constraints()));
  }
}

TEST_CASE("h deduplication keeps the optimum") {
  for (GridDims d : {GridDims{2, 2}, GridDims{2, 4}, GridDims{3, 3}, GridDims{3, 4}}) {
    CAPTURE(d.to_string());
    LowerLpOptions opt;
    opt.dedupe_h = true;
    const FamilyLp plain = build_lower_lp(d);
    const FamilyLp dedup = build_lower_lp(d, opt);
    CHECK(dedup.h_columns <= plain.h_columns);
    CHECK(solve_value(dedup.problem) == doctest::Approx(solve_value(plain.problem)).epsilon(1e-9));
  }
}

TEST_CASE("restricted lower models") {
  const GridDims d{2, 2};
  const double full = solve_value(build_lower_lp(d).problem);
  CHECK(full == doctest::Approx(0.625).epsilon(1e-7));
  CHECK(solve_value(build_lower_lp_restricted(ConstraintSet::all_paths(d)).problem) ==
        doctest::Approx(full));
  const auto single = ConstraintSet::of_paths(d, {MonotonePath(d, {2, 2, 2})});
  CHECK(solve_value(build_lower_lp_restricted(single).problem) >= full - 1e-9);
  const auto one = ConstraintSet::of_paths({1, 1}, {MonotonePath({1, 1}, {1, 1})});
  CHECK(solve_value(build_lower_lp_restricted(one).problem) == doctest::Approx(1.0));
}

TEST_CASE("restriction only raises the value") {
  const GridDims d{3, 3};
  const auto all = enumerate_paths(d);
  double previous = 0;
  std::vector<MonotonePath> subset;
  for (std::size_t k = all.size(); k-- > 0;) {
    subset.push_back(all[k]);
    if (subset.size() % 4 != 0 && k != 0) continue;
    const double v = solve_value(
        build_lower_lp_restricted(ConstraintSet::of_paths(d, subset)).problem);
    if (previous != 0) CHECK(v <= previous + 1e-9);
    previous = v;
  }
  CHECK(previous == doctest::Approx(0.641723).epsilon(1e-5));
}

TEST_CASE("upper models from all pairs") {
  CHECK(solve_value(build_upper_lp_full({1, 1}).problem) == doctest::Approx(1.0));
  CHECK(solve_value(build_upper_lp_full({2, 2}).problem) == doctest::Approx(0.75));
  CHECK(solve_value(build_upper_lp(ConstraintSet::all_pairs({3, 3})).problem) ==
        doctest::Approx(0.740741).epsilon(1e-5));
}

TEST_CASE("builders reject bad sets and oversized models") {
  CHECK_THROWS_AS(build_lower_lp_restricted(ConstraintSet::of_paths({2, 2}, {})),
                  InvalidArgument);
  CHECK_THROWS_AS(build_upper_lp(ConstraintSet::all_paths({2, 2})), InvalidArgument);
  BuildLimits tight;
  tight.max_model_bytes = 1024;
  CHECK_THROWS_AS(build_upper_lp_full({3, 3}, tight), ResourceRefusal);
  tight.force = true;
  CHECK_NOTHROW(build_upper_lp_full({3, 3}, tight));
}

}  // TEST_SUITE
