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

#include "rankinglp/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rankinglp/extraction.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/parallel.hpp"

namespace rankinglp {

namespace {

// Family-specific plumbing for the shared loop.
struct UpperFamily {
  using Member = PathPair;
  static const std::vector<PathPair>& members(const ConstraintSet& s) {
    return s.pairs();
  }
  static double eval(const PriceGrid& g, const PathPair& p) {
    return eval_upper(g, p);
  }
  static std::vector<PathPair> perturb(const PathPair& p) {
    return perturb_pairs(p);
  }
  static FamilyLp build(const ConstraintSet& s) { return build_upper_lp(s); }
  static ConstraintSet make(GridDims dims, std::vector<PathPair> items) {
    return ConstraintSet::of_pairs(dims, std::move(items));
  }
};

struct LowerFamily {
  using Member = MonotonePath;
  static const std::vector<MonotonePath>& members(const ConstraintSet& s) {
    return s.paths();
  }
  static double eval(const PriceGrid& g, const MonotonePath& b) {
    return eval_lower(g, b);
  }
  static std::vector<MonotonePath> perturb(const MonotonePath& b) {
    return neighbors(b);
  }
  static FamilyLp build(const ConstraintSet& s) {
    return build_lower_lp_restricted(s);
  }
  static ConstraintSet make(GridDims dims, std::vector<MonotonePath> items) {
    return ConstraintSet::of_paths(dims, std::move(items));
  }
};

template <typename F>
SearchReport run_search(SearchState state, LpBackend& backend,
                        const SearchOptions& options,
                        const CheckpointFn& checkpoint, Family family) {
  using Member = typename F::Member;
  options.validate();
  if (state.set.family() != family) {
    throw InvalidArgument(std::string("local search for the ") +
                          std::string(family_name(family)) +
                          " family got a " +
                          std::string(family_name(state.set.family())) +
                          " constraint set");
  }
  if (state.set.empty()) throw InvalidArgument("local search needs a non-empty set");
  const GridDims dims = state.set.dims();
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  SolveOptions solve = options.solve;
  solve.time_limit_seconds =
      std::min(solve.time_limit_seconds, options.iteration_time_budget);

  std::optional<SearchReport> best;
  std::vector<IterationRecord> history = state.history;
  ConstraintSet set = state.set;
  double gamma_star = state.gamma_star;
  std::size_t additions = 0;
  std::size_t removals = 0;
  if (!history.empty()) {
    additions = history.back().additions;
    removals = history.back().removals;
    history.pop_back();  // recomputed below from the same LP
  }
  StopReason stop = StopReason::kConverged;
  std::string backend_id = backend.id();

  while (true) {
    if (static_cast<int>(history.size()) >= options.max_iterations) {
      stop = StopReason::kMaxIterations;
      break;
    }
    const FamilyLp lp = F::build(set);
    const LpSolution sol = backend.solve(lp.problem, solve);
    backend_id = sol.backend;
    if (sol.status == SolveStatus::kLimit) {
      stop = StopReason::kSolverLimit;
      break;
    }
    if (!sol.optimal()) {
      throw BackendFailure("LP(S) ended '" + std::string(status_name(sol.status)) +
                           "' at iteration " + std::to_string(history.size()));
    }
    const double gamma = sol.objective;
    const PriceGrid grid = extract_price_grid(sol, dims);
    IterationRecord record{static_cast<int>(history.size()), gamma, set.size(),
                           additions, removals, elapsed(), false};
    if (!(gamma <= gamma_star - options.convergence_epsilon)) {
      history.push_back(record);
      if (!best) {
        best = SearchReport{std::min(gamma_star, gamma), grid, set, {},
                            StopReason::kConverged, backend_id};
      }
      break;
    }
    record.accepted = true;
    history.push_back(record);
    // Replaying from here re-solves this same LP(S) against the old gamma*.
    const SearchState resume{set, gamma_star, history};
    gamma_star = gamma;
    best = SearchReport{gamma, grid, set, history, StopReason::kConverged,
                        backend_id};
    if (checkpoint) checkpoint({*best, resume});

    // Every test reads the f_S fixed at the top of the iteration.
    const std::vector<Member>& members = F::members(set);
    const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
    std::vector<std::vector<Member>> kept(threads);
    std::vector<std::vector<Member>> added(threads);
    parallel_shards(members.size(), threads,
                    [&](unsigned shard, std::size_t begin, std::size_t end) {
                      for (std::size_t k = begin; k < end; ++k) {
                        const Member& member = members[k];
                        if (F::eval(grid, member) > gamma + options.removal_slack) {
                          continue;
                        }
                        kept[shard].push_back(member);
                        for (Member& p : F::perturb(member)) {
                          if (F::eval(grid, p) < gamma - options.add_threshold) {
                            added[shard].push_back(std::move(p));
                          }
                        }
                      }
                    });
    std::vector<Member> next_members;
    for (auto& part : kept) {
      std::move(part.begin(), part.end(), std::back_inserter(next_members));
    }
    removals = members.size() - next_members.size();
    ConstraintSet next = F::make(dims, std::move(next_members));
    std::vector<Member> fresh;
    for (auto& part : added) {
      std::move(part.begin(), part.end(), std::back_inserter(fresh));
    }
    additions = next.insert(std::move(fresh));
    if (next.empty()) {
      throw NumericalError("local search dropped every member of S");
    }
    set = std::move(next);
  }

  if (!best) {
    // Stopped before any LP was accepted (limit or zero iterations).
    throw BackendFailure("local search stopped before its first accepted LP (" +
                         std::string(stop_reason_name(stop)) + ")");
  }
  best->history = std::move(history);
  best->stop = stop;
  best->backend = backend_id;
  return std::move(*best);
}

}  // namespace

void SearchOptions::validate() const {
  if (!(convergence_epsilon > 0) || !(add_threshold > 0) ||
      !(removal_slack > 0)) {
    throw InvalidArgument("search tolerances must be positive");
  }
  if (!(add_threshold > removal_slack)) {
    throw InvalidArgument("add_threshold must exceed removal_slack");
  }
  if (max_iterations < 1) throw InvalidArgument("max_iterations must be >= 1");
}

std::string_view stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::kConverged:
      return "converged";
    case StopReason::kMaxIterations:
      return "max-iterations";
    case StopReason::kSolverLimit:
      return "solver-limit";
  }
  return "unknown";
}

SearchState initial_state(ConstraintSet set, const SearchOptions& options) {
  return SearchState{std::move(set), options.initial_gamma_star, {}};
}

SearchReport local_search_upper(SearchState start, LpBackend& backend,
                                const SearchOptions& options,
                                const CheckpointFn& checkpoint) {
  return run_search<UpperFamily>(std::move(start), backend, options, checkpoint,
                                 Family::kUpper);
}

SearchReport local_search_lower(SearchState start, LpBackend& backend,
                                const SearchOptions& options,
                                const CheckpointFn& checkpoint) {
  return run_search<LowerFamily>(std::move(start), backend, options, checkpoint,
                                 Family::kLower);
}

Certificate certify_lower(const PriceGrid& g, std::uint64_t budget,
                          unsigned threads) {
  const GridDims dims = g.dims();
  if (auto bad = g.violation(kRepairTolerance)) {
    throw InvalidArgument("cannot certify an infeasible grid: " + *bad);
  }
  Certificate cert;
  cert.total = path_count(dims);
  const std::uint64_t visit = std::min(budget, cert.total);
  cert.complete = visit == cert.total;
  if (threads == 0) threads = default_threads();
  // Shard over lexicographic ranks; within a shard walk the successor order.
  struct Partial {
    double value = std::numeric_limits<double>::infinity();
    std::optional<MonotonePath> argmin;
  };
  std::vector<Partial> parts(threads);
  parallel_shards(static_cast<std::size_t>(visit), threads,
                  [&](unsigned shard, std::size_t begin, std::size_t end) {
                    Partial& part = parts[shard];
                    PathEnumerator it(dims, begin);
                    for (std::size_t k = begin; k < end; ++k, it.advance()) {
                      const double v = eval_lower(g, it.current());
                      if (v < part.value) {
                        part.value = v;
                        part.argmin = it.current();
                      }
                    }
                  });
  cert.value = std::numeric_limits<double>::infinity();
  for (Partial& part : parts) {
    if (part.value < cert.value) {
      cert.value = part.value;
      cert.argmin = std::move(part.argmin);
    }
  }
  cert.evaluated = visit;
  return cert;
}

ConstraintSet warm_start(const ConstraintSet& set, GridDims target) {
  const bool doubling = target == set.dims().doubled();
  if (set.family() == Family::kUpper) {
    std::vector<PathPair> out;
    out.reserve(set.size());
    for (const PathPair& p : set.pairs()) {
      out.push_back(doubling ? upscale(p) : regrid(p, target));
    }
    return ConstraintSet::of_pairs(target, std::move(out));
  }
  std::vector<MonotonePath> out;
  out.reserve(set.size());
  for (const MonotonePath& b : set.paths()) {
    out.push_back(doubling ? upscale(b) : regrid(b, target));
  }
  return ConstraintSet::of_paths(target, std::move(out));
}

ConstraintSet warm_start(const ConstraintSet& set) {
  return warm_start(set, set.dims().doubled());
}

ConstraintSet binding_members(const ConstraintSet& set, const PriceGrid& g,
                              double gamma, double slack) {
  if (set.family() == Family::kUpper) {
    std::vector<PathPair> out;
    for (const PathPair& p : set.pairs()) {
      if (eval_upper(g, p) <= gamma + slack) out.push_back(p);
    }
    return ConstraintSet::of_pairs(set.dims(), std::move(out));
  }
  std::vector<MonotonePath> out;
  for (const MonotonePath& b : set.paths()) {
    if (eval_lower(g, b) <= gamma + slack) out.push_back(b);
  }
  return ConstraintSet::of_paths(set.dims(), std::move(out));
}

double evaluate_set(const ConstraintSet& set, const PriceGrid& g) {
  double best = std::numeric_limits<double>::infinity();
  if (set.family() == Family::kUpper) {
    for (const PathPair& p : set.pairs()) best = std::min(best, eval_upper(g, p));
  } else {
    for (const MonotonePath& b : set.paths()) best = std::min(best, eval_lower(g, b));
  }
  return best;
}

}  // namespace rankinglp
