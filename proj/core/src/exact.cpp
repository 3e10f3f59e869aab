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

#include "rankinglp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

#include "rankinglp/extraction.hpp"
#include "rankinglp/gamma.hpp"
#include "rankinglp/parallel.hpp"

namespace rankinglp {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

LpSolution solve_or_throw(LpBackend& backend, const LpProblem& problem,
                          const SolveOptions& options) {
  LpSolution sol = backend.solve(problem, options);
  if (!sol.optimal()) {
    throw BackendFailure("LP solve ended '" + std::string(status_name(sol.status)) +
                         "'");
  }
  return sol;
}

ExactResult upper_full(GridDims dims, LpBackend& backend,
                       const UpperExactOptions& options) {
  const auto start = Clock::now();
  const FamilyLp lp = build_upper_lp_full(dims, options.limits);
  const LpSolution sol = solve_or_throw(backend, lp.problem, options.solve);
  PriceGrid grid = extract_price_grid(sol, dims);
  ConstraintSet binding = binding_members(lp.members, grid, sol.objective, kBindingSlack);
  return {sol.objective, std::move(grid), std::move(binding), lp.problem.size(),
          since(start), sol.backend, 1};
}

struct Candidate {
  double value;
  PathPair pair;
  bool operator<(const Candidate& o) const {
    if (value != o.value) return value < o.value;
    return pair < o.pair;
  }
};

// The `limit` pairs with the smallest eval_upper below `threshold`.
std::vector<Candidate> most_violated(GridDims dims, const PriceGrid& g,
                                     double threshold, std::size_t limit,
                                     unsigned threads) {
  // Shard over b's lexicographic rank; each shard walks its own b range.
  const std::uint64_t nb = path_count(dims);
  if (threads == 0) threads = default_threads();
  std::vector<std::priority_queue<Candidate>> heaps(threads);
  parallel_shards(static_cast<std::size_t>(nb), threads,
                  [&](unsigned shard, std::size_t begin, std::size_t end) {
                    auto& heap = heaps[shard];
                    PathEnumerator it(dims, begin);
                    std::vector<int> a;
                    for (std::size_t k = begin; k < end; ++k, it.advance()) {
                      const MonotonePath& b = it.current();
                      // All a >= b, by a recursive walk over stages.
                      const int m = dims.m();
                      a.assign(b.values().begin(), b.values().end());
                      std::function<void(int)> walk = [&](int i) {
                        if (i < 0) {
                          PathPair pair(MonotonePath(dims, a), b);
                          const double v = eval_upper(g, pair);
                          if (v >= threshold) return;
                          if (heap.size() < limit) {
                            heap.push({v, std::move(pair)});
                          } else if (Candidate{v, pair} < heap.top()) {
                            heap.pop();
                            heap.push({v, std::move(pair)});
                          }
                          return;
                        }
                        const int hi = a[static_cast<std::size_t>(i) + 1];
                        for (int x = b[i]; x <= hi; ++x) {
                          a[static_cast<std::size_t>(i)] = x;
                          walk(i - 1);
                        }
                        a[static_cast<std::size_t>(i)] = b[i];
                      };
                      walk(m - 1);
                    }
                  });
  std::vector<Candidate> all;
  for (auto& heap : heaps) {
    while (!heap.empty()) {
      all.push_back(heap.top());
      heap.pop();
    }
  }
  std::sort(all.begin(), all.end());
  if (all.size() > limit) all.erase(all.begin() + static_cast<std::ptrdiff_t>(limit), all.end());
  return all;
}

ExactResult upper_rowgen(GridDims dims, LpBackend& backend,
                         const UpperExactOptions& options) {
  const auto start = Clock::now();
  // Seed with the rows that are tightest at the all-zero interior grid.
  const PriceGrid zero(dims);
  std::vector<PathPair> seed;
  for (Candidate& c : most_violated(dims, zero, kInfinity, options.rows_per_round,
                                    options.threads)) {
    seed.push_back(std::move(c.pair));
  }
  ConstraintSet set = ConstraintSet::of_pairs(dims, std::move(seed));
  for (int round = 1;; ++round) {
    const FamilyLp lp = build_upper_lp(set, options.limits);
    const LpSolution sol = solve_or_throw(backend, lp.problem, options.solve);
    PriceGrid grid = extract_price_grid(sol, dims);
    const double gamma = sol.objective;
    if (options.progress) options.progress(round, gamma, set.size());
    std::vector<Candidate> worst =
        most_violated(dims, grid, gamma - options.violation_tolerance,
                      options.rows_per_round, options.threads);
    if (worst.empty()) {
      ConstraintSet binding = binding_members(set, grid, gamma, kBindingSlack);
      return {gamma, std::move(grid), std::move(binding), lp.problem.size(),
              since(start), sol.backend, round};
    }
    if (round >= options.max_rounds) {
      throw NumericalError("row generation did not close after " +
                           std::to_string(round) + " rounds");
    }
    std::vector<PathPair> fresh;
    for (Candidate& c : worst) fresh.push_back(std::move(c.pair));
    if (set.insert(std::move(fresh)) == 0) {
      throw NumericalError("row generation found violated rows already in S");
    }
  }
}

}  // namespace

ExactResult solve_lower_exact(GridDims dims, LpBackend& backend,
                              const LowerExactOptions& options) {
  const auto start = Clock::now();
  LowerLpOptions lp_options;
  lp_options.dedupe_h = options.dedupe_h;
  lp_options.limits = options.limits;
  const FamilyLp lp = build_lower_lp(dims, lp_options);
  const LpSolution sol = solve_or_throw(backend, lp.problem, options.solve);
  PriceGrid grid = extract_price_grid(sol, dims);
  ConstraintSet binding = binding_members(lp.members, grid, sol.objective, kBindingSlack);
  return {sol.objective, std::move(grid), std::move(binding), lp.problem.size(),
          since(start), sol.backend, 1};
}

ExactResult solve_upper_exact(GridDims dims, LpBackend& backend,
                              const UpperExactOptions& options) {
  UpperMethod method = options.method;
  if (method == UpperMethod::kAuto) {
    method = dominant_pair_count(dims) <= options.full_model_max_pairs
                 ? UpperMethod::kFull
                 : UpperMethod::kRowGeneration;
  }
  return method == UpperMethod::kFull ? upper_full(dims, backend, options)
                                      : upper_rowgen(dims, backend, options);
}

}  // namespace rankinglp
