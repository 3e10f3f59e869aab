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

// Builders for the lower-bound and upper-bound linear programs.
//
// Both families maximize gamma over the interior price variables g(i, j),
// i < m, j < n. Boundary entries g(i, n) = 1 and g(m, j) = 0 are substituted
// as constants, so the grid monotonicity rows only couple interior cells and
// the remaining boundary relations become the [0, 1] column bounds.
//
// Lower family, for every path b (and stage i, rank b_i <= j <= n):
//   gamma <= (1/n) sum_j (1 - b^-_j/m) g(b^-_j, j) - (1/m) sum_i b_i/n
//            + (1/m) sum_i h(i, b)
//   h(i, b) <= j/n + (1 - j/n + b_i/n)(1 - g(i, j))
//              + (1/n) sum_{k=j}^{n-1} g(b^-_k, k)
// Upper family, for every dominant pair (a, b): gamma <= U(g, a, b) (see
// gamma.hpp).
//
// Every coefficient is a rational with denominator m n. Rows are generated
// as integer numerators over that denominator (ExactRow) and converted to
// doubles only when the LpProblem is assembled.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rankinglp/constraint_set.hpp"
#include "rankinglp/grid_paths.hpp"
#include "rankinglp/lp_problem.hpp"

namespace rankinglp {

// Column layout shared by both families.
struct GridColumns {
  static constexpr int kGamma = 0;
  static int g(GridDims dims, int i, int j) { return 1 + i * dims.n() + j; }
  static int first_free(GridDims dims) { return 1 + dims.m() * dims.n(); }
};

// sum_k (numerator_k / denominator) x_k <= rhs / denominator.
struct ExactRow {
  std::vector<std::pair<int, std::int64_t>> terms;  // sorted by column
  std::int64_t rhs = 0;
  std::int64_t denominator = 1;

  friend bool operator==(const ExactRow&, const ExactRow&) = default;
};

// The gamma row of path b; h_columns[i] is the column of h(i, b).
ExactRow lower_gamma_row(const MonotonePath& b, std::span<const int> h_columns);
// The h row for (i, b, j).
ExactRow lower_h_row(const MonotonePath& b, const InversePath& inv, int i,
                     int j, int h_column);
ExactRow upper_pair_row(const PathPair& pair);

struct LowerLpOptions {
  // Key h variables on (i, b_i, b^-_{b_i..n-1}), which is all the h rows
  // depend on. Same optimum, fewer columns and rows.
  bool dedupe_h = false;
  BuildLimits limits;
};

struct FamilyLp {
  LpProblem problem;
  // Generators in row order: row k (k < members.size()) is the gamma row of
  // the k-th member.
  ConstraintSet members;
  int h_columns = 0;
  int h_rows = 0;
};

FamilyLp build_lower_lp(GridDims dims, const LowerLpOptions& options = {});
// Both constraint families instantiated only for the given paths.
FamilyLp build_lower_lp_restricted(const ConstraintSet& paths,
                                   const LowerLpOptions& options = {});
FamilyLp build_upper_lp(const ConstraintSet& pairs,
                        const BuildLimits& limits = {});
FamilyLp build_upper_lp_full(GridDims dims, const BuildLimits& limits = {});

// Exact column and row counts of the full models, computed without building
// them. Nonzeros are an upper estimate.
ModelSize projected_lower_size(GridDims dims);
ModelSize projected_upper_size(GridDims dims);

// Entry k is the expression that the k-th member's row places above gamma,
// evaluated at the solution: gamma + slack_k / (gamma coefficient).
std::vector<double> gamma_row_bounds(const FamilyLp& lp,
                                     const LpSolution& solution);

}  // namespace rankinglp
