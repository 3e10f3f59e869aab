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

// Local-search constraint generation over a working set S.
//
// Each iteration solves the LP restricted to S, reads its price grid f_S,
// drops members whose expression at f_S is above Gamma(S) + removal_slack,
// and for every kept member adds each local perturbation whose expression is
// below Gamma(S) - add_threshold. The loop stops once Gamma(S) fails to
// improve on the previous value by convergence_epsilon.
//
// For the upper family every Gamma(S) is a valid upper bound on the full LP.
// For the lower family it is only an estimate from above of the full lower
// LP; certify_lower() turns the resulting grid into a sound bound.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rankinglp/constraint_set.hpp"
#include "rankinglp/lp_problem.hpp"
#include "rankinglp/price_grid.hpp"

namespace rankinglp {

struct SearchOptions {
  double convergence_epsilon = 1e-9;
  double add_threshold = 1e-5;
  double removal_slack = 1e-9;
  int max_iterations = 1000;
  // Applied to each LP solve; running out stops the search.
  double iteration_time_budget = std::numeric_limits<double>::infinity();
  double initial_gamma_star = 1.0 + 1e-9;
  unsigned threads = 0;  // 0: hardware concurrency
  SolveOptions solve;

  // Throws InvalidArgument unless every tolerance is positive and
  // add_threshold > removal_slack.
  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  double gamma = 0;  // Gamma(S) of this iteration's LP
  std::size_t set_size = 0;
  std::size_t additions = 0;  // how the set of this iteration was formed
  std::size_t removals = 0;
  double seconds = 0;  // wall time since the search started
  bool accepted = false;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

// Enough to continue a search exactly where a checkpoint left it: the next
// LP to solve is LP(set), to be compared against gamma_star. A non-empty
// history ends with the record of that same LP, which the search replaces.
struct SearchState {
  ConstraintSet set;
  double gamma_star = 1.0 + 1e-9;
  std::vector<IterationRecord> history;
};

enum class StopReason { kConverged, kMaxIterations, kSolverLimit };

std::string_view stop_reason_name(StopReason reason);

struct SearchReport {
  double gamma_star = 0;
  PriceGrid grid;       // f_S of the iteration that produced gamma_star
  ConstraintSet set;    // the S of that iteration
  std::vector<IterationRecord> history;
  StopReason stop = StopReason::kConverged;
  std::string backend;
};

// Called after every accepted iteration. `best` holds the new gamma_star,
// grid, and set; `resume` restarts the search at that same iteration.
struct SearchCheckpoint {
  const SearchReport& best;
  const SearchState& resume;
};
using CheckpointFn = std::function<void(const SearchCheckpoint&)>;

SearchState initial_state(ConstraintSet set, const SearchOptions& options = {});

SearchReport local_search_upper(SearchState start, LpBackend& backend,
                                const SearchOptions& options = {},
                                const CheckpointFn& checkpoint = {});
SearchReport local_search_lower(SearchState start, LpBackend& backend,
                                const SearchOptions& options = {},
                                const CheckpointFn& checkpoint = {});

struct Certificate {
  double value = 0;  // min over the paths visited
  std::optional<MonotonePath> argmin;
  std::uint64_t evaluated = 0;
  std::uint64_t total = 0;
  // True only when every path was visited; only then is value a bound.
  bool complete = false;
};

// min over all paths b of eval_lower(g, b). Visits at most `budget` paths.
Certificate certify_lower(const PriceGrid& g,
                          std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(),
                          unsigned threads = 0);

// Maps every member onto `target`: exact doubling when target is twice the
// source grid, proportional regridding otherwise. Duplicates collapse.
ConstraintSet warm_start(const ConstraintSet& set, GridDims target);
ConstraintSet warm_start(const ConstraintSet& set);  // doubled dims

// Members whose expression at g lies within `slack` of gamma.
ConstraintSet binding_members(const ConstraintSet& set, const PriceGrid& g,
                              double gamma, double slack);

// min over the set of eval_upper (upper) or eval_lower (lower) at g.
double evaluate_set(const ConstraintSet& set, const PriceGrid& g);

}  // namespace rankinglp
