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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "rankinglp/backends.hpp"
#include "rankinglp/dense_simplex.hpp"
#include "rankinglp/errors.hpp"
#include "rankinglp/extraction.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/mps.hpp"

using namespace rankinglp;

namespace {

LpSolution optimal_with(std::vector<double> values) {
  LpSolution sol;
  sol.status = SolveStatus::kOptimal;
  sol.values = std::move(values);
  return sol;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("rankinglp_unit_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_SUITE("backends") {

TEST_CASE("both backends solve the small exact models") {
  HighsBackend highs;
  DenseSimplexBackend dense;
  CHECK(highs.solve(build_lower_lp({1, 1}).problem).objective ==
        doctest::Approx(0.5).epsilon(1e-7));
  CHECK(highs.solve(build_upper_lp_full({2, 2}).problem).objective ==
        doctest::Approx(0.75).epsilon(1e-7));
  for (GridDims d : {GridDims{1, 1}, GridDims{2, 2}, GridDims{2, 3}, GridDims{3, 2}}) {
    CAPTURE(d.to_string());
    const LpProblem lower = build_lower_lp(d).problem;
    const LpSolution a = highs.solve(lower);
    const LpSolution b = dense.solve(lower);
    REQUIRE(a.optimal());
    REQUIRE(b.optimal());
    CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));
    CHECK(max_violation(lower, b.values) < 1e-9);
    const LpProblem upper = build_upper_lp_full(d).problem;
    CHECK(highs.solve(upper).objective ==
          doctest::Approx(dense.solve(upper).objective).epsilon(1e-9));
  }
}

TEST_CASE("contradictory model is infeasible") {
  LpProblem p;
  const int x = p.add_variable("gamma", -kInfinity, kInfinity);
  p.add_constraint("ge", {{x, 1.0}}, RowSense::kGreaterEqual, 1.0);
  p.add_constraint("le", {{x, 1.0}}, RowSense::kLessEqual, 0.0);
  p.set_objective({{x, 1.0}});
  HighsBackend highs;
  DenseSimplexBackend dense;
  CHECK(highs.solve(p).status == SolveStatus::kInfeasible);
  CHECK(dense.solve(p).status == SolveStatus::kInfeasible);
}

TEST_CASE("unbounded model") {
  LpProblem p;
  const int x = p.add_variable("x", 0, kInfinity);
  p.set_objective({{x, 1.0}});
  HighsBackend highs;
  DenseSimplexBackend dense;
  CHECK(highs.solve(p).status == SolveStatus::kUnbounded);
  CHECK(dense.solve(p).status == SolveStatus::kUnbounded);
}

TEST_CASE("equality rows and activities") {
  LpProblem p;
  const int x = p.add_variable("x", 0, 10);
  const int y = p.add_variable("y", 0, 10);
  p.add_constraint("sum", {{x, 1.0}, {y, 1.0}}, RowSense::kEqual, 4.0);
  p.add_constraint("cap", {{x, 1.0}}, RowSense::kLessEqual, 3.0);
  p.set_objective({{x, 2.0}, {y, 1.0}});
  for (const char* id : {"highs", "dense"}) {
    CAPTURE(id);
    const LpSolution s = make_backend(id)->solve(p);
    REQUIRE(s.optimal());
    CHECK(s.objective == doctest::Approx(7.0));
    CHECK(s.activities[0] == doctest::Approx(4.0));
    CHECK(s.slack(p, 1) == doctest::Approx(0.0));
  }
}

TEST_CASE("MPS round trip") {
  const LpProblem lower = build_lower_lp({2, 2}).problem;
  std::stringstream text;
  write_mps(lower, text);
  const LpProblem back = read_mps(text);
  REQUIRE(back.num_variables() == lower.num_variables());
  REQUIRE(back.num_constraints() == lower.num_constraints());
  for (int r = 0; r < lower.num_constraints(); ++r) {
    const auto& x = lower.constraints()[static_cast<std::size_t>(r)];
    const auto& y = back.constraints()[static_cast<std::size_t>(r)];
    CHECK(x.terms == y.terms);
    CHECK(x.rhs == y.rhs);
    CHECK(x.sense == y.sense);
  }
  HighsBackend highs;
  CHECK(highs.solve(back).objective == doctest::Approx(0.625).epsilon(1e-7));

  const auto path = scratch("lower11.mps");
  write_mps(build_lower_lp({1, 1}).problem, path);
  const LpSolution external = highs.solve_file(path);
  std::filesystem::remove(path);
  REQUIRE(external.optimal());
  CHECK(external.objective == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("malformed MPS is rejected") {
  std::stringstream bad("NAME x\nROWS\n Q weird\nENDATA\n");
  CHECK_THROWS_AS(read_mps(bad), InvalidArgument);
}

TEST_CASE("backend selection") {
  CHECK(make_backend("highs")->id().find("highs") != std::string::npos);
  CHECK(make_backend("dense")->id() == "dense");
  CHECK_THROWS_AS(make_backend("cplex"), InvalidArgument);
}

}  // TEST_SUITE

TEST_SUITE("extraction") {

TEST_CASE("grid of the (1,1) lower optimum") {
  HighsBackend highs;
  const LpSolution sol = highs.solve(build_lower_lp({1, 1}).problem);
  const PriceGrid g = extract_price_grid(sol, {1, 1});
  CHECK(g(0, 0) == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(g(0, 1) == 1.0);
  CHECK(g(1, 0) == 0.0);
  CHECK(g(1, 1) == 1.0);
}

TEST_CASE("small violations are repaired") {
  const PriceGrid g = extract_price_grid(optimal_with({0.5, -1e-8}), {1, 1});
  CHECK(g(0, 0) == 0.0);
  // g(0,0) above g(0,1) by 4e-7 on (1,2).
  const PriceGrid h = extract_price_grid(optimal_with({0.5, 0.6, 0.6 - 4e-7}), {1, 2});
  CHECK(h.feasible());
  CHECK(h(0, 0) <= h(0, 1));
}

TEST_CASE("large violations are errors") {
  CHECK_THROWS_AS(extract_price_grid(optimal_with({0.5, 0.5, 0.499}), {1, 2}),
                  NumericalError);
  CHECK_THROWS_AS(extract_price_grid(optimal_with({0.5, 1.01}), {1, 1}), NumericalError);
  LpSolution infeasible = optimal_with({0.5, 0.5});
  infeasible.status = SolveStatus::kInfeasible;
  CHECK_THROWS_AS(extract_price_grid(infeasible, {1, 1}), InvalidArgument);
}

TEST_CASE("isotonic fit") {
  std::vector<double> v{1.0, 3.0, 2.0, 4.0};
  isotonic_non_decreasing(v);
  CHECK(v == std::vector<double>{1.0, 2.5, 2.5, 4.0});
}

}  // TEST_SUITE
