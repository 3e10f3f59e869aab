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

#include "rankinglp/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace rankinglp {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  // Write then rename, so an interrupted checkpoint never truncates the
  // previous one.
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

template <typename T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

json history_json(const std::vector<IterationRecord>& history) {
  json out = json::array();
  for (const IterationRecord& r : history) {
    out.push_back({{"iteration", r.iteration},
                   {"gamma", r.gamma},
                   {"set_size", r.set_size},
                   {"additions", r.additions},
                   {"removals", r.removals},
                   {"seconds", r.seconds},
                   {"accepted", r.accepted}});
  }
  return out;
}

std::vector<IterationRecord> history_from(const json& arr) {
  std::vector<IterationRecord> out;
  for (const json& r : arr) {
    out.push_back({get<int>(r, "iteration"), get<double>(r, "gamma"),
                   get<std::size_t>(r, "set_size"),
                   get<std::size_t>(r, "additions"),
                   get<std::size_t>(r, "removals"), get<double>(r, "seconds"),
                   get<bool>(r, "accepted")});
  }
  return out;
}

}  // namespace

SearchState SolutionFile::resume_state() const {
  return SearchState{constraint_set, gamma_star.value_or(1.0 + 1e-9), history};
}

std::string solution_to_json(const SolutionFile& file) {
  json j;
  j["schema_version"] = file.schema_version;
  j["family"] = std::string(family_name(file.family));
  j["dims"] = {{"m", file.dims.m()}, {"n", file.dims.n()}};
  j["gamma"] = file.gamma;
  j["mode"] = file.mode;
  j["g"] = std::vector<double>(file.g.values().begin(), file.g.values().end());
  json members = json::array();
  if (file.constraint_set.family() == Family::kUpper) {
    for (const PathPair& p : file.constraint_set.pairs()) members.push_back(p.to_string());
  } else {
    for (const MonotonePath& b : file.constraint_set.paths()) members.push_back(b.to_string());
  }
  j["constraint_set"] = std::move(members);
  j["provenance"] = {{"command", file.provenance.command},
                     {"seed", file.provenance.seed},
                     {"backend", file.provenance.backend},
                     {"wall_seconds", file.provenance.wall_seconds}};
  j["history"] = history_json(file.history);
  if (file.gamma_star) j["gamma_star"] = *file.gamma_star;
  return j.dump(1);
}

SolutionFile solution_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("solution file is not JSON: ") + e.what());
  }
  try {
    SolutionFile f;
    f.schema_version = get<int>(j, "schema_version");
    if (f.schema_version != kSchemaVersion) {
      throw InvalidArgument("unsupported schema_version " +
                            std::to_string(f.schema_version));
    }
    f.family = parse_family(get<std::string>(j, "family"));
    const json& d = j.at("dims");
    f.dims = GridDims(get<int>(d, "m"), get<int>(d, "n"));
    f.gamma = get<double>(j, "gamma");
    if (j.contains("mode")) f.mode = j.at("mode").get<std::string>();
    f.g = PriceGrid::from_values(f.dims, get<std::vector<double>>(j, "g"));
    const auto members = get<std::vector<std::string>>(j, "constraint_set");
    if (f.family == Family::kUpper) {
      std::vector<PathPair> pairs;
      for (const std::string& s : members) pairs.push_back(PathPair::parse(s));
      f.constraint_set = ConstraintSet::of_pairs(f.dims, std::move(pairs));
    } else {
      std::vector<MonotonePath> paths;
      for (const std::string& s : members) paths.push_back(MonotonePath::parse(s, f.dims));
      f.constraint_set = ConstraintSet::of_paths(f.dims, std::move(paths));
    }
    if (j.contains("provenance")) {
      const json& p = j.at("provenance");
      f.provenance = {get<std::string>(p, "command"), get<std::uint64_t>(p, "seed"),
                      get<std::string>(p, "backend"), get<double>(p, "wall_seconds")};
    }
    if (j.contains("history")) f.history = history_from(j.at("history"));
    if (j.contains("gamma_star")) f.gamma_star = j.at("gamma_star").get<double>();
    return f;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed solution file: ") + e.what());
  }
}

void save_solution(const SolutionFile& file, const std::filesystem::path& path) {
  write_file(path, solution_to_json(file) + "\n");
}

SolutionFile load_solution(const std::filesystem::path& path) {
  return solution_from_json(read_file(path));
}

double reevaluate(const SolutionFile& file) {
  return evaluate_set(file.constraint_set, file.g);
}

std::string instance_to_json(const BipartiteInstance& inst) {
  json j;
  j["dims"] = {{"m", inst.dims.m()}, {"n", inst.dims.n()}};
  json off = json::array();
  for (const OfflineVertex& v : inst.offline) {
    off.push_back({{"id", v.id}, {"weight", v.weight}, {"rank", v.rank}});
  }
  json on = json::array();
  for (const OnlineVertex& u : inst.online) {
    on.push_back({{"id", u.id}, {"stage", u.stage}, {"order_key", u.order_key}});
  }
  json edges = json::array();
  for (const Edge& e : inst.edges) edges.push_back({e.online, e.offline});
  j["offline"] = std::move(off);
  j["online"] = std::move(on);
  j["edges"] = std::move(edges);
  return j.dump(1);
}

BipartiteInstance instance_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    BipartiteInstance inst;
    const json& d = j.at("dims");
    inst.dims = GridDims(get<int>(d, "m"), get<int>(d, "n"));
    for (const json& v : j.at("offline")) {
      inst.offline.push_back({get<int>(v, "id"), get<double>(v, "weight"),
                              get<int>(v, "rank")});
    }
    for (const json& u : j.at("online")) {
      inst.online.push_back({get<int>(u, "id"), get<int>(u, "stage"),
                             get<std::int64_t>(u, "order_key")});
    }
    for (const json& e : j.at("edges")) {
      inst.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed instance file: ") + e.what());
  }
}

void save_instance(const BipartiteInstance& inst,
                   const std::filesystem::path& path) {
  write_file(path, instance_to_json(inst) + "\n");
}

BipartiteInstance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

std::string_view table_mode_name(TableMode mode) {
  switch (mode) {
    case TableMode::kExactLower:
      return "exact-lower";
    case TableMode::kHeuristicLower:
      return "heuristic-lower";
    case TableMode::kCertifiedLower:
      return "certified-lower";
    case TableMode::kExactUpper:
      return "exact-upper";
    case TableMode::kSearchUpper:
      return "search-upper";
  }
  return "unknown";
}

void write_table_header(std::ostream& out) {
  out << "m,n,value,mode,seconds,certified\n";
}

void write_table_row(std::ostream& out, const TableRow& row) {
  out << row.m << "," << row.n << "," << fixed6(row.value) << ","
      << table_mode_name(row.mode) << "," << fixed6(row.seconds) << ","
      << (row.certified ? "yes" : "no") << "\n";
}

void write_iteration_csv(std::ostream& out,
                         const std::vector<IterationRecord>& history) {
  out << "iteration,gamma,set_size,seconds\n";
  for (const IterationRecord& r : history) {
    out << r.iteration << "," << fixed6(r.gamma) << "," << r.set_size << ","
        << fixed6(r.seconds) << "\n";
  }
}

void write_iteration_csv(const std::filesystem::path& path,
                         const std::vector<IterationRecord>& history) {
  std::ostringstream out;
  write_iteration_csv(out, history);
  write_file(path, out.str());
}

}  // namespace rankinglp
