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

#include "rankinglp/verification.hpp"

#include <algorithm>
#include <sstream>

#include "rankinglp/gamma.hpp"
#include "rankinglp/io.hpp"

namespace rankinglp {

namespace {

constexpr std::size_t kMaxMessages = 10;
constexpr double kPropertyTolerance = 1e-9;

void record_failure(SuiteReport& report, const std::string& message) {
  ++report.failures;
  if (report.messages.size() < kMaxMessages) report.messages.push_back(message);
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out;
}

// Random instance with at least one edge and a designated edge on it.
struct Trial {
  BipartiteInstance inst;
  int u = 0;
  int v = 0;
  PriceGrid g;
};

Trial draw_trial(std::mt19937_64& rng, const ReplaySuiteParams& params) {
  std::uniform_int_distribution<int> dim(1, params.max_dim);
  while (true) {
    RandomInstanceParams rp;
    rp.dims = GridDims(dim(rng), dim(rng));
    rp.max_offline = params.max_offline;
    rp.max_online = params.max_online;
    rp.edge_probability = params.edge_probability;
    rp.weighted = true;
    BipartiteInstance inst = random_instance(rp, rng());
    if (inst.edges.empty()) continue;
    const Edge e = inst.edges[std::uniform_int_distribution<std::size_t>(
        0, inst.edges.size() - 1)(rng)];
    PriceGrid g = random_price_grid(inst.dims, rng);
    return {std::move(inst), e.online, e.offline, std::move(g)};
  }
}

std::optional<std::string> structure_violation(const BipartiteInstance& inst,
                                            int u, int v, const PriceGrid& g) {
  const ThresholdProfile prof = extract_thresholds(inst, u, v, g);
  if (!prof.structure_valid) return "classification is not three intervals";
  if (!prof.beta_monotone) return "beta decreases: " + join(prof.beta);
  return std::nullopt;
}

std::optional<std::string> dual_bound_violation(const BipartiteInstance& inst,
                                            int u, int v, const PriceGrid& g) {
  const ThresholdProfile prof = extract_thresholds(inst, u, v, g);
  if (!prof.structure_valid || !prof.beta_monotone) {
    return "no threshold structure to compare against";
  }
  const double gamma =
      gamma_exact(g, prof.alpha, prof.beta_path(inst.dims)).total;
  const double w = inst.offline[static_cast<std::size_t>(v)].weight;
  const double duals = expected_duals(inst, u, v, g);
  if (duals < gamma * w - kPropertyTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "E[t_u + t_v] = " << duals << " < gamma * w_v = " << gamma * w;
    return msg.str();
  }
  return std::nullopt;
}

std::string dump_counterexample(const Trial& t) {
  std::ostringstream out;
  out << "{\"u\": " << t.u << ", \"v\": " << t.v << ", \"g\": [";
  out.precision(17);
  for (std::size_t k = 0; k < t.g.values().size(); ++k) {
    out << (k ? ", " : "") << t.g.values()[k];
  }
  out << "], \"instance\": " << instance_to_json(t.inst) << "}";
  return out.str();
}

SuiteReport run_replay_suite(
    const std::string& name, std::uint64_t seed,
    const ReplaySuiteParams& params,
    std::optional<std::string> (*check)(const BipartiteInstance&, int, int,
                                        const PriceGrid&)) {
  SuiteReport report;
  report.name = name;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < params.instances; ++k) {
    Trial t = draw_trial(rng, params);
    ++report.trials;
    auto bad = check(t.inst, t.u, t.v, t.g);
    if (!bad) continue;
    record_failure(report, "instance " + std::to_string(k) + ": " + *bad);
    if (!report.counterexample) {
      const PriceGrid g = t.g;
      t.inst = minimize_instance(
          t.inst, t.u, t.v,
          [&](const BipartiteInstance& inst, int u, int v) {
            return check(inst, u, v, g).has_value();
          });
      report.counterexample = dump_counterexample(t);
    }
  }
  return report;
}

}  // namespace

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << "suite " << name << ": " << (trials - failures) << "/" << trials
      << " pass";
  return out.str();
}

SuiteReport run_counts_suite(int max_dim) {
  SuiteReport report;
  report.name = "counts";
  for (int m = 1; m <= max_dim; ++m) {
    for (int n = 1; n <= max_dim; ++n) {
      ++report.trials;
      const GridDims dims(m, n);
      std::uint64_t seen = 0;
      for_each_path(dims, [&](const MonotonePath&) { ++seen; });
      const std::uint64_t expect = binomial(static_cast<std::uint64_t>(m + n),
                                            static_cast<std::uint64_t>(m));
      if (seen != expect || path_count(dims) != expect) {
        record_failure(report, dims.to_string() + ": enumerated " +
                                   std::to_string(seen) + ", binomial " +
                                   std::to_string(expect));
      }
    }
  }
  ++report.trials;
  const GridDims big(11, 12);
  std::uint64_t streamed = 0;
  for (PathEnumerator it(big); !it.done(); it.advance()) ++streamed;
  if (streamed != 1352078 || path_count(big) != 1352078) {
    record_failure(report, "(11,12): streamed " + std::to_string(streamed) +
                               ", counted " + std::to_string(path_count(big)));
  }
  return report;
}

std::vector<GridDims> default_sandwich_grids() {
  return {GridDims(3, 3), GridDims(4, 6), GridDims(6, 4), GridDims(6, 6)};
}

PathPair random_dominant_pair(GridDims dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, path_count(dims) - 1);
  const MonotonePath b = unrank_path(dims, pick(rng));
  const MonotonePath other = unrank_path(dims, pick(rng));
  std::vector<int> a(b.values().begin(), b.values().end());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], other.values()[i]);
  return PathPair(MonotonePath(dims, std::move(a)), b);
}

SuiteReport run_sandwich_suite(std::uint64_t seed, int trials,
                               const std::vector<GridDims>& grids) {
  SuiteReport report;
  report.name = "sandwich";
  std::mt19937_64 rng(seed);
  for (const GridDims& dims : grids) {
    for (int t = 0; t < trials; ++t) {
      ++report.trials;
      const PriceGrid g = random_price_grid(dims, rng);
      const PathPair pair = random_dominant_pair(dims, rng);
      const double lo = eval_lower(g, pair.b());
      const double mid = gamma_exact(g, pair).total;
      const double hi = eval_upper(g, pair);
      if (lo > mid + kPropertyTolerance || mid > hi + kPropertyTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << dims.to_string() << " pair " << pair.to_string() << ": L=" << lo
            << " gamma=" << mid << " U=" << hi;
        record_failure(report, msg.str());
      }
    }
  }
  return report;
}

SuiteReport run_structure_suite(std::uint64_t seed, const ReplaySuiteParams& params) {
  return run_replay_suite("structure", seed, params, &structure_violation);
}

SuiteReport run_dual_bound_suite(std::uint64_t seed, const ReplaySuiteParams& params) {
  return run_replay_suite("duals", seed, params, &dual_bound_violation);
}

SuiteReport run_witness_suite(std::uint64_t seed, int max_dim) {
  SuiteReport report;
  report.name = "witness";
  std::mt19937_64 rng(seed);
  for (int d = 1; d <= max_dim; ++d) {
    const GridDims dims(d, d);
    const PriceGrid g = random_price_grid(dims, rng);
    for_each_dominant_pair(dims, [&](const PathPair& pair) {
      ++report.trials;
      const Witness w = build_witness(pair, g);
      const int vertices = static_cast<int>(w.instance.offline.size() +
                                            w.instance.online.size());
      const ThresholdProfile prof = extract_thresholds(w.instance, w.u, w.v, g);
      const std::vector<int> a(pair.a().values().begin(),
                               pair.a().values().end() - 1);
      const std::vector<int> b(pair.b().values().begin(),
                               pair.b().values().end() - 1);
      if (!prof.structure_valid || prof.alpha != a || prof.beta != b ||
          vertices > 4 * d + 2) {
        record_failure(report, "pair " + pair.to_string() + " gave alpha=" +
                                   join(prof.alpha) + " beta=" + join(prof.beta) +
                                   " with " + std::to_string(vertices) +
                                   " vertices");
      }
    });
  }
  return report;
}

std::vector<std::string> suite_names() {
  // lemma2 and lemma3 are the command-line aliases of structure and duals.
  return {"sandwich", "structure", "duals", "witness", "counts", "lemma2", "lemma3"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "sandwich") {
    return run_sandwich_suite(seed, 1000, default_sandwich_grids());
  }
  if (name == "structure" || name == "lemma2") return run_structure_suite(seed);
  if (name == "duals" || name == "lemma3") return run_dual_bound_suite(seed);
  if (name == "witness") return run_witness_suite(seed);
  if (name == "counts") return run_counts_suite();
  throw InvalidArgument("unknown suite '" + name + "'");
}

BipartiteInstance minimize_instance(
    BipartiteInstance inst, int& u, int& v,
    const std::function<bool(const BipartiteInstance&, int, int)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < inst.edges.size(); ++k) {
      if (inst.edges[k] == Edge{u, v}) continue;
      BipartiteInstance trial = inst;
      trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(k));
      if (fails(trial, u, v)) {
        inst = std::move(trial);
        progress = true;
        break;
      }
    }
  }
  // Drop vertices that no edge touches, then renumber.
  std::vector<bool> keep_on(inst.online.size(), false);
  std::vector<bool> keep_off(inst.offline.size(), false);
  for (const Edge& e : inst.edges) {
    keep_on[static_cast<std::size_t>(e.online)] = true;
    keep_off[static_cast<std::size_t>(e.offline)] = true;
  }
  BipartiteInstance out;
  out.dims = inst.dims;
  std::vector<int> on_map(inst.online.size(), -1);
  std::vector<int> off_map(inst.offline.size(), -1);
  for (std::size_t k = 0; k < inst.online.size(); ++k) {
    if (!keep_on[k]) continue;
    on_map[k] = static_cast<int>(out.online.size());
    out.online.push_back(inst.online[k]);
  }
  for (std::size_t k = 0; k < inst.offline.size(); ++k) {
    if (!keep_off[k]) continue;
    off_map[k] = static_cast<int>(out.offline.size());
    out.offline.push_back(inst.offline[k]);
  }
  for (const Edge& e : inst.edges) {
    out.edges.push_back({on_map[static_cast<std::size_t>(e.online)],
                         off_map[static_cast<std::size_t>(e.offline)]});
  }
  const int nu = on_map[static_cast<std::size_t>(u)];
  const int nv = off_map[static_cast<std::size_t>(v)];
  if (fails(out, nu, nv)) {
    u = nu;
    v = nv;
    return out;
  }
  return inst;  // isolated vertices mattered (ids in tie-breaks)
}

}  // namespace rankinglp
