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

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rankinglp/grid_paths.hpp"

namespace rankinglp {

// The discretized price function g(i, j) for i in [0, m], j in [0, n].
//
// Feasible grids are non-decreasing in j, non-increasing in i, and carry the
// boundary values g(i, n) = 1 and g(m, j) = 0 for j < n. The corner g(m, n)
// is 1. Only the interior block i < m, j < n is free; the constructor fills
// it with zeros, which is feasible.
class PriceGrid {
 public:
  explicit PriceGrid(GridDims dims);

  // Row-major (m + 1) x (n + 1) values. Boundary entries must already hold
  // their fixed values; the interior is validated against `tolerance`.
  static PriceGrid from_values(GridDims dims, std::vector<double> values,
                               double tolerance = 0.0);

  const GridDims& dims() const { return dims_; }
  double operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i * (dims_.n() + 1) + j)];
  }
  // Interior entries only.
  void set(int i, int j, double value);
  std::span<const double> values() const { return values_; }

  // Description of the first feasibility violation larger than `tolerance`.
  std::optional<std::string> violation(double tolerance = 0.0) const;
  bool feasible(double tolerance = 0.0) const {
    return !violation(tolerance).has_value();
  }

  // Entries g(i, j) == g(i, j + 1) for i < m, j + 1 < n: rank plateaus
  // on which utility comparisons are decided by tie-breaking.
  std::vector<std::pair<int, int>> rank_plateaus() const;

  friend bool operator==(const PriceGrid&, const PriceGrid&) = default;

 private:
  double& at(int i, int j) {
    return values_[static_cast<std::size_t>(i * (dims_.n() + 1) + j)];
  }

  GridDims dims_;
  std::vector<double> values_;
};

// A random feasible grid: iid uniform interior, rows sorted ascending, then
// columns sorted descending (which keeps the rows sorted). Interior entries
// are distinct with probability one.
PriceGrid random_price_grid(GridDims dims, std::mt19937_64& rng);

}  // namespace rankinglp
