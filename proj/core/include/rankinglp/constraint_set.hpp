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

#pragma once

#include <vector>

#include "rankinglp/grid_paths.hpp"
#include "rankinglp/lp_problem.hpp"

namespace rankinglp {

// The working set of constraint generators: single paths for the lower
// family, dominant pairs for the upper family. Kept sorted and duplicate
// free, so iteration order is deterministic.
class ConstraintSet {
 public:
  static ConstraintSet of_paths(GridDims dims, std::vector<MonotonePath> paths);
  static ConstraintSet of_pairs(GridDims dims, std::vector<PathPair> pairs);
  static ConstraintSet all_paths(GridDims dims);
  static ConstraintSet all_pairs(GridDims dims);

  Family family() const { return family_; }
  const GridDims& dims() const { return dims_; }
  const std::vector<MonotonePath>& paths() const;
  const std::vector<PathPair>& pairs() const;
  std::size_t size() const {
    return family_ == Family::kLower ? paths_.size() : pairs_.size();
  }
  bool empty() const { return size() == 0; }

  // Bulk insertion; returns how many members were new.
  std::size_t insert(std::vector<MonotonePath> paths);
  std::size_t insert(std::vector<PathPair> pairs);
  bool contains(const MonotonePath& path) const;
  bool contains(const PathPair& pair) const;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

 private:
  ConstraintSet(Family family, GridDims dims) : family_(family), dims_(dims) {}

  Family family_;
  GridDims dims_;
  std::vector<MonotonePath> paths_;
  std::vector<PathPair> pairs_;
};

}  // namespace rankinglp
