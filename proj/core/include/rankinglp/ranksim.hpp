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

// Discretized Ranking under m-stage independent arrivals.
//
// Offline vertices carry a rank index in [0, n), online vertices a stage in
// [0, m) and an order key. Online vertices arrive by (stage, order key); an
// arriving u takes the unmatched neighbor v with the largest
// w_v (1 - g(stage_u, rank_v)), ties going to the lower rank and then the
// lower offline id, and it takes one whenever any neighbor is free. The
// matched edge splits w_v into t_u = (1 - g) w_v and t_v = g w_v.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rankinglp/gamma.hpp"
#include "rankinglp/grid_paths.hpp"
#include "rankinglp/price_grid.hpp"

namespace rankinglp {

struct OfflineVertex {
  int id = 0;
  double weight = 1;
  int rank = 0;

  friend bool operator==(const OfflineVertex&, const OfflineVertex&) = default;
};

struct OnlineVertex {
  int id = 0;
  int stage = 0;
  // Position inside a stage. Keys are distinct across the whole instance,
  // so moving a vertex to another stage keeps every relative order intact.
  std::int64_t order_key = 0;

  friend bool operator==(const OnlineVertex&, const OnlineVertex&) = default;
};

struct Edge {
  int online = 0;   // index into online
  int offline = 0;  // index into offline

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct BipartiteInstance {
  GridDims dims{1, 1};
  std::vector<OfflineVertex> offline;
  std::vector<OnlineVertex> online;
  std::vector<Edge> edges;

  // Ranges, distinct ids and order keys, non-negative weights, edges in
  // range and not repeated. Throws InvalidArgument.
  void validate() const;

  friend bool operator==(const BipartiteInstance&, const BipartiteInstance&) = default;
};

struct DualOutcome {
  std::vector<int> online_match;   // offline index, or -1
  std::vector<int> offline_match;  // online index, or -1
  // Arrival position (0-based) of the online vertex that took each offline
  // vertex, or -1.
  std::vector<int> matched_at;
  std::vector<double> online_dual;
  std::vector<double> offline_dual;
  // Arrival position of each online vertex.
  std::vector<int> arrival;

  double size_weight() const;  // total matched weight
};

DualOutcome run_ranking(const BipartiteInstance& inst, const PriceGrid& g);

// Outcome class of (u, v) for one setting of u's stage and v's rank.
enum class PairOutcome { kPreMatched, kMatched, kUnmatched };

struct ThresholdProfile {
  std::vector<int> alpha;  // per stage, in [0, n]
  std::vector<int> beta;
  // Every stage classified as kPreMatched^beta kMatched^(alpha-beta)
  // kUnmatched^(n-alpha) over ranks 0..n-1.
  bool structure_valid = false;
  bool beta_monotone = false;
  // outcome[i][j]
  std::vector<std::vector<PairOutcome>> outcome;

  // beta as a path (b_m = n); requires beta_monotone.
  MonotonePath beta_path(GridDims dims) const;
};

// Replays every (stage of u, rank of v) combination with all other
// vertices fixed. `u` indexes online, `v` indexes offline; (u, v) must be
// an edge.
ThresholdProfile extract_thresholds(const BipartiteInstance& inst, int u,
                                    int v, const PriceGrid& g);

// Average of t_u + t_v over the m n replays.
double expected_duals(const BipartiteInstance& inst, int u, int v,
                      const PriceGrid& g);

struct Witness {
  BipartiteInstance instance;
  int u = 0;  // online index
  int v = 0;  // offline index
};

// An unweighted instance whose (u, v) thresholds are exactly (a, b) under
// any g that is strictly increasing in rank on [0, n) at every stage.
//
// Layout: u arrives last in its stage and is adjacent to v and to one
// fallback d_i of rank a_i for each stage with a_i < n. A consumer online
// vertex opening stage i + 1 takes d_i, so at stage i the best fallback
// left to u is d_i. For each stage with b_i > 0 a grabber p_i, arriving
// before u, is adjacent to v and to a private sink of rank b_i (no sink
// when b_i = n), so p_i takes v exactly when rank_v < b_i. Fallbacks and
// sinks have lower ids than v, which settles the rank ties at a_i and b_i
// in their favour. At most 4m + 1 vertices and 4m edges.
//
// Throws InvalidArgument listing the plateau cells when g is not strictly
// increasing in rank.
Witness build_witness(const PathPair& pair, const PriceGrid& g);

struct RandomInstanceParams {
  GridDims dims{2, 2};
  int max_offline = 6;
  int max_online = 6;
  double edge_probability = 0.5;
  bool weighted = true;  // uniform (0, 1] weights, else all 1
};

// Deterministic in (params, seed). Vertex counts are uniform in
// [1, max_*]; edge_probability 0 gives an empty edge set.
BipartiteInstance random_instance(const RandomInstanceParams& params,
                                  std::uint64_t seed);

}  // namespace rankinglp
