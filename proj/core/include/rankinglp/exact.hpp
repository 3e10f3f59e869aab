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

// Exact solves of the two full LPs.

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "rankinglp/constraint_set.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/price_grid.hpp"
#include "rankinglp/search.hpp"

namespace rankinglp {

struct ExactResult {
  double gamma = 0;
  PriceGrid grid;
  ConstraintSet binding;  // members within kBindingSlack of gamma at grid
  ModelSize size;         // of the (last) model handed to the solver
  double seconds = 0;
  std::string backend;
  int rounds = 1;  // LP solves; above 1 only for row generation
};

inline constexpr double kBindingSlack = 1e-7;

struct LowerExactOptions {
  bool dedupe_h = false;
  BuildLimits limits;
  SolveOptions solve;
};

ExactResult solve_lower_exact(GridDims dims, LpBackend& backend,
                              const LowerExactOptions& options = {});

enum class UpperMethod { kAuto, kFull, kRowGeneration };

struct UpperExactOptions {
  UpperMethod method = UpperMethod::kAuto;
  // kAuto builds the full model up to this many dominant pairs.
  double full_model_max_pairs = 250'000;
  // Row generation: pairs added per round (most violated first) and the
  // violation that counts.
  std::size_t rows_per_round = 2000;
  double violation_tolerance = 1e-9;
  int max_rounds = 500;
  BuildLimits limits;
  SolveOptions solve;
  unsigned threads = 0;
  // Called after every row-generation round with (round, gamma, |S|).
  std::function<void(int, double, std::size_t)> progress;
};

// kRowGeneration solves LP(S) on a growing S and, after each solve, scans
// every dominant pair for rows violated at the current grid. It stops when
// none is violated by more than violation_tolerance, at which point the
// grid is feasible for the full LP and the value equals its optimum.
ExactResult solve_upper_exact(GridDims dims, LpBackend& backend,
                              const UpperExactOptions& options = {});

}  // namespace rankinglp
