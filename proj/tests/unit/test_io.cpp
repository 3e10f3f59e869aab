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

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "rankinglp/backends.hpp"
#include "rankinglp/errors.hpp"
#include "rankinglp/exact.hpp"
#include "rankinglp/io.hpp"
#include "rankinglp/search.hpp"

using namespace rankinglp;

namespace {

SolutionFile from_exact(Family family, GridDims dims, const ExactResult& r) {
  SolutionFile f;
  f.family = family;
  f.dims = dims;
  f.gamma = r.gamma;
  f.g = r.grid;
  f.constraint_set = r.binding;
  f.provenance = {"unit", 42, r.backend, r.seconds};
  f.mode = family == Family::kUpper ? "exact-upper" : "exact-lower";
  return f;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("solution files round trip and re-evaluate") {
  HighsBackend highs;
  for (GridDims d : {GridDims{2, 2}, GridDims{3, 3}}) {
    for (Family fam : {Family::kLower, Family::kUpper}) {
      const ExactResult r = fam == Family::kUpper ? solve_upper_exact(d, highs)
                                                  : solve_lower_exact(d, highs);
      const SolutionFile f = from_exact(fam, d, r);
      const SolutionFile back = solution_from_json(solution_to_json(f));
      CHECK(back.family == fam);
      CHECK(back.dims == d);
      CHECK(back.gamma == f.gamma);
      CHECK(back.g == f.g);
      CHECK(back.constraint_set == f.constraint_set);
      CHECK(back.provenance.seed == 42);
      CHECK(reevaluate(back) == doctest::Approx(f.gamma).epsilon(1e-6));
    }
  }
}

TEST_CASE("solution files on disk") {
  HighsBackend highs;
  const ExactResult r = solve_upper_exact({2, 2}, highs);
  SolutionFile f = from_exact(Family::kUpper, {2, 2}, r);
  f.history = {{0, 0.8, 3, 1, 0, 0.01, true}, {1, 0.75, 4, 2, 1, 0.02, true}};
  f.gamma_star = 0.8;
  const auto path = std::filesystem::temp_directory_path() /
                    ("rankinglp_io_" + std::to_string(::getpid()) + ".json");
  save_solution(f, path);
  const SolutionFile back = load_solution(path);
  std::filesystem::remove(path);
  CHECK(back.history == f.history);
  REQUIRE(back.gamma_star.has_value());
  CHECK(*back.gamma_star == 0.8);
  const SearchState s = back.resume_state();
  CHECK(s.gamma_star == 0.8);
  CHECK(s.set == f.constraint_set);
}

TEST_CASE("malformed solution files") {
  CHECK_THROWS_AS(solution_from_json("{not json"), InvalidArgument);
  CHECK_THROWS_AS(solution_from_json("{}"), InvalidArgument);
  CHECK_THROWS_AS(
      solution_from_json(R"({"schema_version": 99, "family": "upper"})"),
      InvalidArgument);
  CHECK_THROWS_AS(load_solution("/nonexistent/rankinglp.json"), Error);
}

TEST_CASE("instance files round trip") {
  BipartiteInstance inst;
  inst.dims = {2, 3};
  inst.offline = {{0, 0.5, 2}, {1, 1.0, 0}};
  inst.online = {{0, 1, 7}, {1, 0, 3}};
  inst.edges = {{0, 0}, {1, 1}, {1, 0}};
  CHECK(instance_from_json(instance_to_json(inst)) == inst);
  CHECK_THROWS_AS(instance_from_json(R"({"dims": [2, 2]})"), InvalidArgument);
}

TEST_CASE("table rows") {
  std::ostringstream out;
  write_table_header(out);
  write_table_row(out, {3, 3, 0.6417231, TableMode::kExactLower, 0.25, true});
  CHECK(out.str() == "m,n,value,mode,seconds,certified\n"
                     "3,3,0.641723,exact-lower,0.250000,yes\n");
  std::ostringstream it;
  write_iteration_csv(it, {{0, 0.7265626, 23, 0, 0, 0.003, true}});
  CHECK(it.str() == "iteration,gamma,set_size,seconds\n0,0.726563,23,0.003000\n");
}

}  // TEST_SUITE
