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

#include "rankinglp/ranksim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "rankinglp/errors.hpp"

namespace rankinglp {

void BipartiteInstance::validate() const {
  const auto fail = [](const std::string& what) {
    throw InvalidArgument("invalid instance: " + what);
  };
  std::set<int> ids;
  for (const OfflineVertex& v : offline) {
    if (!ids.insert(v.id).second) fail("duplicate offline id " + std::to_string(v.id));
    if (v.rank < 0 || v.rank >= dims.n()) {
      fail("offline " + std::to_string(v.id) + " has rank outside [0, n)");
    }
    if (!(v.weight >= 0) || !std::isfinite(v.weight)) {
      fail("offline " + std::to_string(v.id) + " has a bad weight");
    }
  }
  ids.clear();
  std::set<std::int64_t> keys;
  for (const OnlineVertex& u : online) {
    if (!ids.insert(u.id).second) fail("duplicate online id " + std::to_string(u.id));
    if (u.stage < 0 || u.stage >= dims.m()) {
      fail("online " + std::to_string(u.id) + " has stage outside [0, m)");
    }
    if (!keys.insert(u.order_key).second) {
      fail("order key " + std::to_string(u.order_key) + " is repeated");
    }
  }
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.online < 0 || e.online >= static_cast<int>(online.size()) ||
        e.offline < 0 || e.offline >= static_cast<int>(offline.size())) {
      fail("edge references a missing vertex");
    }
    if (!seen.insert(e).second) fail("repeated edge");
  }
}

double DualOutcome::size_weight() const {
  return std::accumulate(online_dual.begin(), online_dual.end(), 0.0) +
         std::accumulate(offline_dual.begin(), offline_dual.end(), 0.0);
}

DualOutcome run_ranking(const BipartiteInstance& inst, const PriceGrid& g) {
  if (inst.dims != g.dims()) {
    throw InvalidArgument("instance grid " + inst.dims.to_string() +
                          " does not match price grid " + g.dims().to_string());
  }
  const std::size_t nu = inst.online.size();
  const std::size_t nv = inst.offline.size();
  std::vector<std::vector<int>> adj(nu);
  for (const Edge& e : inst.edges) {
    adj[static_cast<std::size_t>(e.online)].push_back(e.offline);
  }
  std::vector<int> order(nu);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const OnlineVertex& a = inst.online[static_cast<std::size_t>(x)];
    const OnlineVertex& b = inst.online[static_cast<std::size_t>(y)];
    if (a.stage != b.stage) return a.stage < b.stage;
    return a.order_key < b.order_key;
  });

  DualOutcome out;
  out.online_match.assign(nu, -1);
  out.offline_match.assign(nv, -1);
  out.matched_at.assign(nv, -1);
  out.online_dual.assign(nu, 0.0);
  out.offline_dual.assign(nv, 0.0);
  out.arrival.assign(nu, -1);
  for (std::size_t step = 0; step < nu; ++step) {
    const int ui = order[step];
    const OnlineVertex& u = inst.online[static_cast<std::size_t>(ui)];
    out.arrival[static_cast<std::size_t>(ui)] = static_cast<int>(step);
    int best = -1;
    double best_utility = 0;
    for (int vi : adj[static_cast<std::size_t>(ui)]) {
      if (out.offline_match[static_cast<std::size_t>(vi)] >= 0) continue;
      const OfflineVertex& v = inst.offline[static_cast<std::size_t>(vi)];
      const double utility = v.weight * (1.0 - g(u.stage, v.rank));
      bool better = best < 0 || utility > best_utility;
      if (!better && utility == best_utility) {
        const OfflineVertex& b = inst.offline[static_cast<std::size_t>(best)];
        better = v.rank < b.rank || (v.rank == b.rank && v.id < b.id);
      }
      if (better) {
        best = vi;
        best_utility = utility;
      }
    }
    if (best < 0) continue;
    const OfflineVertex& v = inst.offline[static_cast<std::size_t>(best)];
    const double price = g(u.stage, v.rank);
    out.online_match[static_cast<std::size_t>(ui)] = best;
    out.offline_match[static_cast<std::size_t>(best)] = ui;
    out.matched_at[static_cast<std::size_t>(best)] = static_cast<int>(step);
    out.online_dual[static_cast<std::size_t>(ui)] = (1.0 - price) * v.weight;
    out.offline_dual[static_cast<std::size_t>(best)] = price * v.weight;
  }
  return out;
}

MonotonePath ThresholdProfile::beta_path(GridDims dims) const {
  std::vector<int> b(beta);
  b.push_back(dims.n());
  return MonotonePath(dims, std::move(b));
}

namespace {

void require_edge(const BipartiteInstance& inst, int u, int v) {
  if (u < 0 || u >= static_cast<int>(inst.online.size()) || v < 0 ||
      v >= static_cast<int>(inst.offline.size())) {
    throw InvalidArgument("designated vertices are out of range");
  }
  if (std::find(inst.edges.begin(), inst.edges.end(), Edge{u, v}) ==
      inst.edges.end()) {
    throw InvalidArgument("designated (u, v) is not an edge");
  }
}

}  // namespace

ThresholdProfile extract_thresholds(const BipartiteInstance& inst, int u,
                                    int v, const PriceGrid& g) {
  require_edge(inst, u, v);
  const int m = inst.dims.m();
  const int n = inst.dims.n();
  BipartiteInstance replay = inst;
  ThresholdProfile prof;
  prof.alpha.assign(static_cast<std::size_t>(m), 0);
  prof.beta.assign(static_cast<std::size_t>(m), 0);
  prof.outcome.assign(static_cast<std::size_t>(m),
                      std::vector<PairOutcome>(static_cast<std::size_t>(n)));
  prof.structure_valid = true;
  for (int i = 0; i < m; ++i) {
    replay.online[static_cast<std::size_t>(u)].stage = i;
    auto& row = prof.outcome[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      replay.offline[static_cast<std::size_t>(v)].rank = j;
      const DualOutcome run = run_ranking(replay, g);
      const int taker = run.offline_match[static_cast<std::size_t>(v)];
      const int u_step = run.arrival[static_cast<std::size_t>(u)];
      const int v_step = run.matched_at[static_cast<std::size_t>(v)];
      PairOutcome o = PairOutcome::kUnmatched;
      if (taker == u) {
        o = PairOutcome::kMatched;
      } else if (taker >= 0 && v_step < u_step) {
        o = PairOutcome::kPreMatched;
      }
      row[static_cast<std::size_t>(j)] = o;
    }
    int pre = 0;
    while (pre < n && row[static_cast<std::size_t>(pre)] == PairOutcome::kPreMatched) ++pre;
    int mid = pre;
    while (mid < n && row[static_cast<std::size_t>(mid)] == PairOutcome::kMatched) ++mid;
    int tail = mid;
    while (tail < n && row[static_cast<std::size_t>(tail)] == PairOutcome::kUnmatched) ++tail;
    if (tail != n) prof.structure_valid = false;
    prof.beta[static_cast<std::size_t>(i)] = pre;
    prof.alpha[static_cast<std::size_t>(i)] = mid;
  }
  prof.beta_monotone = std::is_sorted(prof.beta.begin(), prof.beta.end());
  return prof;
}

double expected_duals(const BipartiteInstance& inst, int u, int v,
                      const PriceGrid& g) {
  require_edge(inst, u, v);
  const int m = inst.dims.m();
  const int n = inst.dims.n();
  BipartiteInstance replay = inst;
  double total = 0;
  for (int i = 0; i < m; ++i) {
    replay.online[static_cast<std::size_t>(u)].stage = i;
    for (int j = 0; j < n; ++j) {
      replay.offline[static_cast<std::size_t>(v)].rank = j;
      const DualOutcome run = run_ranking(replay, g);
      total += run.online_dual[static_cast<std::size_t>(u)] +
               run.offline_dual[static_cast<std::size_t>(v)];
    }
  }
  return total / (static_cast<double>(m) * n);
}

Witness build_witness(const PathPair& pair, const PriceGrid& g) {
  const GridDims dims = pair.dims();
  if (g.dims() != dims) {
    throw InvalidArgument("price grid " + g.dims().to_string() +
                          " does not match pair grid " + dims.to_string());
  }
  if (auto plateaus = g.rank_plateaus(); !plateaus.empty()) {
    std::ostringstream msg;
    msg << "witness needs g strictly increasing in rank; equal neighbours at";
    for (const auto& [i, j] : plateaus) {
      msg << " g(" << i << "," << j << ")=g(" << i << "," << j + 1 << ")";
    }
    throw InvalidArgument(msg.str());
  }
  const int m = dims.m();
  const int n = dims.n();
  const MonotonePath& a = pair.a();
  const MonotonePath& b = pair.b();

  Witness w;
  BipartiteInstance& inst = w.instance;
  inst.dims = dims;
  auto add_offline = [&](int rank) {
    const int idx = static_cast<int>(inst.offline.size());
    inst.offline.push_back({idx, 1.0, rank});
    return idx;
  };
  std::int64_t next_key = 0;
  auto add_online = [&](int stage, std::int64_t key) {
    const int idx = static_cast<int>(inst.online.size());
    inst.online.push_back({idx, stage, key});
    return idx;
  };

  std::vector<int> fallback(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (a[i] < n) fallback[static_cast<std::size_t>(i)] = add_offline(a[i]);
  }
  std::vector<int> sink(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (b[i] > 0 && b[i] < n) sink[static_cast<std::size_t>(i)] = add_offline(b[i]);
  }
  w.v = add_offline(0);

  // Keys grow with stage so that consumers precede grabbers inside a
  // stage; u's key exceeds every other one.
  for (int i = 0; i < m; ++i) {
    if (i > 0 && fallback[static_cast<std::size_t>(i - 1)] >= 0) {
      const int c = add_online(i, next_key++);
      inst.edges.push_back({c, fallback[static_cast<std::size_t>(i - 1)]});
    }
    if (b[i] > 0) {
      const int p = add_online(i, next_key++);
      inst.edges.push_back({p, w.v});
      if (sink[static_cast<std::size_t>(i)] >= 0) {
        inst.edges.push_back({p, sink[static_cast<std::size_t>(i)]});
      }
    }
  }
  w.u = add_online(0, next_key++);
  inst.edges.push_back({w.u, w.v});
  for (int i = 0; i < m; ++i) {
    if (fallback[static_cast<std::size_t>(i)] >= 0) {
      inst.edges.push_back({w.u, fallback[static_cast<std::size_t>(i)]});
    }
  }
  inst.validate();
  return w;
}

BipartiteInstance random_instance(const RandomInstanceParams& params,
                                  std::uint64_t seed) {
  if (params.max_offline < 1 || params.max_online < 1) {
    throw InvalidArgument("random instances need at least one vertex per side");
  }
  std::mt19937_64 rng(seed);
  const auto uniform_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  BipartiteInstance inst;
  inst.dims = params.dims;
  const int nv = uniform_int(1, params.max_offline);
  const int nu = uniform_int(1, params.max_online);
  for (int k = 0; k < nv; ++k) {
    const double w = params.weighted ? 1.0 - unit(rng) : 1.0;  // (0, 1]
    inst.offline.push_back({k, w, uniform_int(0, params.dims.n() - 1)});
  }
  std::vector<std::int64_t> keys(static_cast<std::size_t>(nu));
  std::iota(keys.begin(), keys.end(), 0);
  std::shuffle(keys.begin(), keys.end(), rng);
  for (int k = 0; k < nu; ++k) {
    inst.online.push_back(
        {k, uniform_int(0, params.dims.m() - 1), keys[static_cast<std::size_t>(k)]});
  }
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) {
      if (params.edge_probability > 0 && unit(rng) < params.edge_probability) {
        inst.edges.push_back({u, v});
      }
    }
  }
  return inst;
}

}  // namespace rankinglp
