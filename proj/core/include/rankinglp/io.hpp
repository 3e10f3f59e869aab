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

// Persisted formats: JSON solution files, JSON instance files, and CSV
// tables. Values in CSV are printed with six decimals.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankinglp/constraint_set.hpp"
#include "rankinglp/price_grid.hpp"
#include "rankinglp/ranksim.hpp"
#include "rankinglp/search.hpp"

namespace rankinglp {

inline constexpr int kSchemaVersion = 1;

struct Provenance {
  std::string command;
  std::uint64_t seed = 0;
  std::string backend;
  double wall_seconds = 0;
};

// A solved or partially searched model. Re-evaluating the stored set at the
// stored grid reproduces gamma.
struct SolutionFile {
  int schema_version = kSchemaVersion;
  Family family = Family::kUpper;
  GridDims dims{1, 1};
  double gamma = 0;
  PriceGrid g{GridDims{1, 1}};
  ConstraintSet constraint_set = ConstraintSet::of_pairs(GridDims{1, 1}, {});
  Provenance provenance;
  std::string mode;  // table mode that produced the file
  std::vector<IterationRecord> history;
  // Present in search checkpoints: the gamma* to resume against.
  std::optional<double> gamma_star;

  SearchState resume_state() const;
};

void save_solution(const SolutionFile& file, const std::filesystem::path& path);
SolutionFile load_solution(const std::filesystem::path& path);
std::string solution_to_json(const SolutionFile& file);
SolutionFile solution_from_json(const std::string& text);

// min over the stored set of the family's expression at the stored grid.
double reevaluate(const SolutionFile& file);

std::string instance_to_json(const BipartiteInstance& inst);
BipartiteInstance instance_from_json(const std::string& text);
void save_instance(const BipartiteInstance& inst,
                   const std::filesystem::path& path);
BipartiteInstance load_instance(const std::filesystem::path& path);

enum class TableMode {
  kExactLower,
  kHeuristicLower,
  kCertifiedLower,
  kExactUpper,
  kSearchUpper,
};
std::string_view table_mode_name(TableMode mode);

struct TableRow {
  int m = 0;
  int n = 0;
  double value = 0;
  TableMode mode = TableMode::kExactLower;
  double seconds = 0;
  bool certified = false;
};

// "m,n,value,mode,seconds,certified"
void write_table_header(std::ostream& out);
void write_table_row(std::ostream& out, const TableRow& row);

// "iteration,gamma,set_size,seconds"
void write_iteration_csv(std::ostream& out,
                         const std::vector<IterationRecord>& history);
void write_iteration_csv(const std::filesystem::path& path,
                         const std::vector<IterationRecord>& history);

}  // namespace rankinglp
