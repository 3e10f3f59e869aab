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

#include "rankinglp/lp_builders.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rankinglp {

namespace {

// Accumulates integer numerators; grid cells on the boundary fold into the
// right-hand side.
class RowAccumulator {
 public:
  explicit RowAccumulator(GridDims dims) : dims_(dims) {
    row_.denominator = static_cast<std::int64_t>(dims.m()) * dims.n();
  }

  void add_column(int column, std::int64_t coef) {
    if (coef != 0) row_.terms.emplace_back(column, coef);
  }
  // coef * g(i, j) on the left-hand side.
  void add_cell(int i, int j, std::int64_t coef) {
    if (coef == 0) return;
    if (j == dims_.n()) {
      row_.rhs -= coef;  // g(i, n) = 1
    } else if (i == dims_.m()) {
      // g(m, j) = 0 for j < n
    } else {
      row_.terms.emplace_back(GridColumns::g(dims_, i, j), coef);
    }
  }
  void add_rhs(std::int64_t value) { row_.rhs += value; }

  ExactRow finish() && {
    auto& t = row_.terms;
    std::sort(t.begin(), t.end());
    std::vector<std::pair<int, std::int64_t>> merged;
    merged.reserve(t.size());
    for (const auto& [col, coef] : t) {
      if (!merged.empty() && merged.back().first == col) {
        merged.back().second += coef;
      } else {
        merged.emplace_back(col, coef);
      }
    }
    std::erase_if(merged, [](const auto& term) { return term.second == 0; });
    t = std::move(merged);
    return std::move(row_);
  }

 private:
  GridDims dims_;
  ExactRow row_;
};

void add_exact_row(LpProblem& problem, std::string name, const ExactRow& row) {
  std::vector<LpTerm> terms;
  terms.reserve(row.terms.size());
  const double den = static_cast<double>(row.denominator);
  for (const auto& [col, coef] : row.terms) {
    terms.push_back({col, static_cast<double>(coef) / den});
  }
  problem.add_constraint(std::move(name), std::move(terms),
                         RowSense::kLessEqual,
                         static_cast<double>(row.rhs) / den);
}

std::string cell_name(int i, int j) {
  return "g_" + std::to_string(i) + "_" + std::to_string(j);
}

// gamma and the interior g columns, plus the grid monotonicity rows.
void add_grid_columns(LpProblem& problem, GridDims dims) {
  problem.add_variable("gamma", -kInfinity, kInfinity);
  for (int i = 0; i < dims.m(); ++i) {
    for (int j = 0; j < dims.n(); ++j) {
      problem.add_variable(cell_name(i, j), 0.0, 1.0);
    }
  }
  problem.set_objective({{GridColumns::kGamma, 1.0}});
}

void add_monotonicity_rows(LpProblem& problem, GridDims dims) {
  for (int i = 0; i < dims.m(); ++i) {
    for (int j = 0; j + 1 < dims.n(); ++j) {
      problem.add_constraint(
          "rank_" + std::to_string(i) + "_" + std::to_string(j),
          {{GridColumns::g(dims, i, j), 1.0},
           {GridColumns::g(dims, i, j + 1), -1.0}},
          RowSense::kLessEqual, 0.0);
    }
  }
  for (int i = 0; i + 1 < dims.m(); ++i) {
    for (int j = 0; j < dims.n(); ++j) {
      problem.add_constraint(
          "stage_" + std::to_string(i) + "_" + std::to_string(j),
          {{GridColumns::g(dims, i + 1, j), 1.0},
           {GridColumns::g(dims, i, j), -1.0}},
          RowSense::kLessEqual, 0.0);
    }
  }
}

std::uint64_t monotonicity_row_count(GridDims dims) {
  return static_cast<std::uint64_t>(dims.m()) * (dims.n() - 1) +
         static_cast<std::uint64_t>(dims.m() - 1) * dims.n();
}

// Key of an h variable in dedupe mode.
std::vector<int> h_key(const MonotonePath& b, const InversePath& inv, int i) {
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(2 + b.dims().n() - b[i]));
  key.push_back(i);
  key.push_back(b[i]);
  for (int k = b[i]; k < b.dims().n(); ++k) key.push_back(inv[k]);
  return key;
}

}  // namespace

ExactRow lower_gamma_row(const MonotonePath& b,
                         std::span<const int> h_columns) {
  const GridDims dims = b.dims();
  const int m = dims.m();
  const int n = dims.n();
  const InversePath inv = inverse(b);
  RowAccumulator row(dims);
  row.add_column(GridColumns::kGamma, static_cast<std::int64_t>(m) * n);
  for (int j = 0; j < n; ++j) row.add_cell(inv[j], j, -(m - inv[j]));
  std::int64_t area = 0;
  for (int i = 0; i < m; ++i) {
    row.add_column(h_columns[static_cast<std::size_t>(i)], -n);
    area += b[i];
  }
  row.add_rhs(-area);
  return std::move(row).finish();
}

ExactRow lower_h_row(const MonotonePath& b, const InversePath& inv, int i,
                     int j, int h_column) {
  const GridDims dims = b.dims();
  const int m = dims.m();
  const int n = dims.n();
  RowAccumulator row(dims);
  const std::int64_t weight = static_cast<std::int64_t>(m) * (n - j + b[i]);
  row.add_column(h_column, static_cast<std::int64_t>(m) * n);
  row.add_cell(i, j, weight);
  for (int k = j; k < n; ++k) row.add_cell(inv[k], k, -m);
  row.add_rhs(static_cast<std::int64_t>(m) * j + weight);
  return std::move(row).finish();
}

ExactRow upper_pair_row(const PathPair& pair) {
  const GridDims dims = pair.dims();
  const int m = dims.m();
  const int n = dims.n();
  const MonotonePath& a = pair.a();
  const MonotonePath& b = pair.b();
  const InversePath inv = inverse(b);
  RowAccumulator row(dims);
  row.add_column(GridColumns::kGamma, static_cast<std::int64_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const std::int64_t weight = n - a[i] + b[i];
    row.add_rhs(a[i] - b[i]);
    row.add_rhs(weight);
    row.add_cell(i + 1, a[i], weight);
    for (int j = a[i]; j < n && inv[j] < m; ++j) row.add_cell(inv[j], j + 1, -1);
  }
  for (int j = 0; j < n; ++j) row.add_cell(inv[j], j + 1, -(m - inv[j]));
  return std::move(row).finish();
}

FamilyLp build_lower_lp(GridDims dims, const LowerLpOptions& options) {
  options.limits.check(projected_lower_size(dims), "lower LP");
  return build_lower_lp_restricted(ConstraintSet::all_paths(dims), options);
}

FamilyLp build_lower_lp_restricted(const ConstraintSet& paths,
                                   const LowerLpOptions& options) {
  if (paths.family() != Family::kLower) {
    throw InvalidArgument("lower LP needs a lower-family constraint set");
  }
  if (paths.empty()) throw InvalidArgument("lower LP needs at least one path");
  const GridDims dims = paths.dims();
  const int m = dims.m();

  FamilyLp out{LpProblem{}, paths, 0, 0};
  LpProblem& problem = out.problem;
  problem.metadata().dims = dims;
  problem.metadata().family = Family::kLower;
  add_grid_columns(problem, dims);

  // Columns first so that the gamma rows can come first in row order.
  std::vector<std::vector<int>> h_of(paths.size(), std::vector<int>(m));
  std::vector<std::vector<bool>> owns_rows(paths.size(),
                                           std::vector<bool>(m, true));
  std::map<std::vector<int>, int> shared;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const MonotonePath& b = paths.paths()[p];
    const InversePath inv = inverse(b);
    for (int i = 0; i < m; ++i) {
      if (options.dedupe_h) {
        auto [it, fresh] = shared.try_emplace(h_key(b, inv, i), -1);
        if (fresh) {
          it->second = problem.add_variable(
              "h_" + std::to_string(i) + "_" + std::to_string(out.h_columns),
              -kInfinity, kInfinity);
          ++out.h_columns;
        } else {
          owns_rows[p][i] = false;
        }
        h_of[p][i] = it->second;
      } else {
        h_of[p][i] = problem.add_variable(
            "h_" + std::to_string(i) + "_" + std::to_string(p), -kInfinity,
            kInfinity);
        ++out.h_columns;
      }
    }
  }

  for (std::size_t p = 0; p < paths.size(); ++p) {
    add_exact_row(problem, "gamma_" + std::to_string(p),
                  lower_gamma_row(paths.paths()[p], h_of[p]));
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const MonotonePath& b = paths.paths()[p];
    const InversePath inv = inverse(b);
    for (int i = 0; i < m; ++i) {
      if (!owns_rows[p][i]) continue;
      for (int j = b[i]; j <= dims.n(); ++j) {
        add_exact_row(problem,
                      "h_" + std::to_string(i) + "_" + std::to_string(p) +
                          "_" + std::to_string(j),
                      lower_h_row(b, inv, i, j, h_of[p][i]));
        ++out.h_rows;
      }
    }
  }
  add_monotonicity_rows(problem, dims);
  return out;
}

FamilyLp build_upper_lp(const ConstraintSet& pairs, const BuildLimits& limits) {
  if (pairs.family() != Family::kUpper) {
    throw InvalidArgument("upper LP needs an upper-family constraint set");
  }
  if (pairs.empty()) throw InvalidArgument("upper LP needs at least one pair");
  const GridDims dims = pairs.dims();
  ModelSize size;
  size.variables = static_cast<std::uint64_t>(GridColumns::first_free(dims));
  size.constraints = pairs.size() + monotonicity_row_count(dims);
  size.nonzeros = pairs.size() * size.variables +
                  2 * monotonicity_row_count(dims);
  size.estimated = true;
  limits.check(size, "upper LP");

  FamilyLp out{LpProblem{}, pairs, 0, 0};
  LpProblem& problem = out.problem;
  problem.metadata().dims = dims;
  problem.metadata().family = Family::kUpper;
  problem.reserve_constraints(size.constraints);
  add_grid_columns(problem, dims);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    add_exact_row(problem, "pair_" + std::to_string(k),
                  upper_pair_row(pairs.pairs()[k]));
  }
  add_monotonicity_rows(problem, dims);
  return out;
}

FamilyLp build_upper_lp_full(GridDims dims, const BuildLimits& limits) {
  limits.check(projected_upper_size(dims), "upper LP");
  return build_upper_lp(ConstraintSet::all_pairs(dims), limits);
}

ModelSize projected_lower_size(GridDims dims) {
  const int m = dims.m();
  const int n = dims.n();
  const std::uint64_t paths = path_count(dims);
  // Paths with b_i = v: C(i + v, i) prefixes times C(m-1-i + n-v, m-1-i)
  // suffixes; each contributes n - v + 1 h rows.
  std::uint64_t h_rows = 0;
  std::uint64_t h_nonzeros = 0;
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v <= n; ++v) {
      const std::uint64_t with_v =
          binomial(static_cast<std::uint64_t>(i + v),
                   static_cast<std::uint64_t>(i)) *
          binomial(static_cast<std::uint64_t>(m - 1 - i + n - v),
                   static_cast<std::uint64_t>(m - 1 - i));
      const std::uint64_t rows = static_cast<std::uint64_t>(n - v + 1);
      h_rows += with_v * rows;
      // Row for rank j touches h, g(i, j), and up to n - j suffix cells.
      for (int j = v; j <= n; ++j) {
        h_nonzeros += with_v * static_cast<std::uint64_t>(2 + n - j);
      }
    }
  }
  ModelSize size;
  size.variables = 1 + static_cast<std::uint64_t>(m) * n +
                   static_cast<std::uint64_t>(m) * paths;
  size.constraints = paths + h_rows + monotonicity_row_count(dims);
  size.nonzeros = paths * static_cast<std::uint64_t>(1 + n + m) + h_nonzeros +
                  2 * monotonicity_row_count(dims);
  size.estimated = true;
  return size;
}

ModelSize projected_upper_size(GridDims dims) {
  const double pairs = dominant_pair_count(dims);
  ModelSize size;
  size.variables = static_cast<std::uint64_t>(GridColumns::first_free(dims));
  const double rows = pairs + static_cast<double>(monotonicity_row_count(dims));
  constexpr double kMax = 1.8e19;
  size.constraints = static_cast<std::uint64_t>(std::min(rows, kMax));
  size.nonzeros = static_cast<std::uint64_t>(
      std::min(pairs * static_cast<double>(size.variables), kMax));
  size.estimated = true;
  return size;
}

std::vector<double> gamma_row_bounds(const FamilyLp& lp,
                                     const LpSolution& solution) {
  std::vector<double> out;
  out.reserve(lp.members.size());
  const double gamma = solution.values[GridColumns::kGamma];
  for (std::size_t k = 0; k < lp.members.size(); ++k) {
    const LpConstraint& row = lp.problem.constraints()[k];
    const double coef = row.terms.front().coef;  // gamma is column 0
    out.push_back(gamma + solution.slack(lp.problem, static_cast<int>(k)) / coef);
  }
  return out;
}

}  // namespace rankinglp
