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

// Seeded property suites shared by the CLI and the test programs.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rankinglp/grid_paths.hpp"
#include "rankinglp/ranksim.hpp"

namespace rankinglp {

struct SuiteReport {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::optional<std::string> counterexample;  // minimized, where supported

  bool passed() const { return failures == 0; }
  std::string summary() const;
};

// Path counts against binomial(m + n, m) for m, n <= max_dim by full
// enumeration, plus a streamed count at (11, 12).
SuiteReport run_counts_suite(int max_dim = 8);

// eval_lower <= gamma_exact <= eval_upper (within 1e-9) for random feasible
// g and random dominant pairs, `trials` per grid.
SuiteReport run_sandwich_suite(std::uint64_t seed, int trials,
                               const std::vector<GridDims>& grids);
std::vector<GridDims> default_sandwich_grids();

// Random instances with exhaustive replay. The structure suite checks the
// three-interval structure and monotone beta; the dual-bound suite checks
// expected_duals against gamma_exact of the extracted thresholds.
struct ReplaySuiteParams {
  int instances = 10000;
  int max_dim = 4;
  int max_offline = 6;
  int max_online = 6;
  double edge_probability = 0.5;
};
SuiteReport run_structure_suite(std::uint64_t seed,
                                const ReplaySuiteParams& params = {});
SuiteReport run_dual_bound_suite(std::uint64_t seed,
                                 const ReplaySuiteParams& params = {});

// Every dominant pair on (d, d), d <= max_dim, round-trips through
// build_witness and extract_thresholds under a random strictly monotone g.
SuiteReport run_witness_suite(std::uint64_t seed, int max_dim = 4);

SuiteReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<std::string> suite_names();

// A pair drawn from random paths: b uniform, a = max(b, b') with b' uniform.
PathPair random_dominant_pair(GridDims dims, std::mt19937_64& rng);

// Drops edges (never the designated one) and then isolated vertices while
// `fails` keeps returning true. Indices of u and v are updated in place.
BipartiteInstance minimize_instance(
    BipartiteInstance inst, int& u, int& v,
    const std::function<bool(const BipartiteInstance&, int, int)>& fails);

}  // namespace rankinglp
