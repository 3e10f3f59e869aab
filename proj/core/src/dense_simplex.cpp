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

#include "rankinglp/dense_simplex.hpp"

#include <chrono>
#include <cmath>
#include <vector>

namespace rankinglp {

namespace {

using Real = long double;

constexpr Real kPivotTol = 1e-12L;
constexpr Real kOptTol = 1e-11L;

// x_k = offset + sign * y_plus (- y_minus for free columns), y >= 0.
struct ColumnMap {
  int plus = -1;
  int minus = -1;
  Real offset = 0;
  Real sign = 1;
};

struct Tableau {
  int rows = 0;
  int cols = 0;  // excluding the rhs column
  std::vector<Real> cells;
  std::vector<int> basis;

  Real& at(int r, int c) {
    return cells[static_cast<std::size_t>(r) * (cols + 1) + c];
  }
  Real& rhs(int r) { return at(r, cols); }

  void pivot(int pr, int pc) {
    const Real p = at(pr, pc);
    for (int c = 0; c <= cols; ++c) at(pr, c) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Real f = at(r, pc);
      if (f == 0) continue;
      for (int c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  }
};

enum class PhaseResult { kOptimal, kUnbounded, kLimit };

// Maximizes cost . y over the current tableau, with columns >= `blocked`
// never entering.
PhaseResult run_phase(Tableau& t, const std::vector<Real>& cost, int blocked,
                      std::int64_t& iterations, std::int64_t limit) {
  while (true) {
    if (iterations >= limit) return PhaseResult::kLimit;
    // Reduced costs d_c = cost_c - sum_r cost_{basis r} * a_{rc}.
    int enter = -1;
    for (int c = 0; c < blocked && enter < 0; ++c) {
      Real d = cost[static_cast<std::size_t>(c)];
      for (int r = 0; r < t.rows; ++r) {
        d -= cost[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])] *
             t.at(r, c);
      }
      if (d > kOptTol) enter = c;  // Bland: first improving column
    }
    if (enter < 0) return PhaseResult::kOptimal;
    int leave = -1;
    Real best = 0;
    for (int r = 0; r < t.rows; ++r) {
      const Real a = t.at(r, enter);
      if (a <= kPivotTol) continue;
      const Real ratio = t.rhs(r) / a;
      if (leave < 0 || ratio < best - kPivotTol ||
          (ratio <= best + kPivotTol &&
           t.basis[static_cast<std::size_t>(r)] <
               t.basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return PhaseResult::kUnbounded;
    t.pivot(leave, enter);
    ++iterations;
  }
}

}  // namespace

LpSolution DenseSimplexBackend::solve(const LpProblem& problem,
                                      const SolveOptions& options) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto& vars = problem.variables();
  const auto& cons = problem.constraints();

  // Shift and split the columns so that every structural y is >= 0.
  std::vector<ColumnMap> map(vars.size());
  int ny = 0;
  struct Row {
    std::vector<std::pair<int, Real>> terms;
    RowSense sense;
    Real rhs;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const LpVariable& v = vars[k];
    ColumnMap& cm = map[k];
    if (v.lower != -kInfinity) {
      cm.plus = ny++;
      cm.offset = v.lower;
      if (v.upper != kInfinity) {
        rows.push_back({{{cm.plus, 1}}, RowSense::kLessEqual,
                        static_cast<Real>(v.upper) - v.lower});
      }
    } else if (v.upper != kInfinity) {
      cm.plus = ny++;
      cm.offset = v.upper;
      cm.sign = -1;
    } else {
      cm.plus = ny++;
      cm.minus = ny++;
    }
  }
  for (const LpConstraint& c : cons) {
    Row row{{}, c.sense, static_cast<Real>(c.rhs)};
    for (const LpTerm& t : c.terms) {
      const ColumnMap& cm = map[static_cast<std::size_t>(t.var)];
      row.rhs -= static_cast<Real>(t.coef) * cm.offset;
      row.terms.emplace_back(cm.plus, static_cast<Real>(t.coef) * cm.sign);
      if (cm.minus >= 0) row.terms.emplace_back(cm.minus, -static_cast<Real>(t.coef));
    }
    rows.push_back(std::move(row));
  }

  // Normalize to rhs >= 0, then one slack per inequality and one artificial
  // per row whose slack cannot start basic.
  const int nrows = static_cast<int>(rows.size());
  int nslack = 0;
  int nart = 0;
  std::vector<int> slack_of(static_cast<std::size_t>(nrows), -1);
  std::vector<Real> slack_sign(static_cast<std::size_t>(nrows), 0);
  std::vector<int> art_of(static_cast<std::size_t>(nrows), -1);
  for (int r = 0; r < nrows; ++r) {
    Row& row = rows[static_cast<std::size_t>(r)];
    if (row.rhs < 0) {
      row.rhs = -row.rhs;
      for (auto& term : row.terms) term.second = -term.second;
      if (row.sense == RowSense::kLessEqual) {
        row.sense = RowSense::kGreaterEqual;
      } else if (row.sense == RowSense::kGreaterEqual) {
        row.sense = RowSense::kLessEqual;
      }
    }
    if (row.sense != RowSense::kEqual) {
      slack_of[static_cast<std::size_t>(r)] = nslack++;
      slack_sign[static_cast<std::size_t>(r)] =
          row.sense == RowSense::kLessEqual ? 1 : -1;
    }
    if (row.sense != RowSense::kLessEqual) art_of[static_cast<std::size_t>(r)] = nart++;
  }

  Tableau t;
  t.rows = nrows;
  t.cols = ny + nslack + nart;
  const std::size_t cells =
      static_cast<std::size_t>(t.rows) * static_cast<std::size_t>(t.cols + 1);
  if (cells > max_cells_) {
    throw BackendFailure("dense simplex refuses a " + std::to_string(t.rows) +
                         " x " + std::to_string(t.cols) + " tableau");
  }
  t.cells.assign(cells, 0);
  t.basis.assign(static_cast<std::size_t>(nrows), -1);
  for (int r = 0; r < nrows; ++r) {
    const Row& row = rows[static_cast<std::size_t>(r)];
    for (const auto& [c, a] : row.terms) t.at(r, c) += a;
    const int s = slack_of[static_cast<std::size_t>(r)];
    if (s >= 0) t.at(r, ny + s) = slack_sign[static_cast<std::size_t>(r)];
    const int a = art_of[static_cast<std::size_t>(r)];
    if (a >= 0) {
      t.at(r, ny + nslack + a) = 1;
      t.basis[static_cast<std::size_t>(r)] = ny + nslack + a;
    } else {
      t.basis[static_cast<std::size_t>(r)] = ny + s;
    }
    t.rhs(r) = row.rhs;
  }

  LpSolution sol;
  sol.backend = id();
  std::int64_t iterations = 0;
  const auto finish = [&](SolveStatus status) {
    sol.status = status;
    sol.iterations = iterations;
    sol.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return sol;
  };

  if (nart > 0) {
    std::vector<Real> phase1(static_cast<std::size_t>(t.cols), 0);
    for (int a = 0; a < nart; ++a) phase1[static_cast<std::size_t>(ny + nslack + a)] = -1;
    const PhaseResult res =
        run_phase(t, phase1, ny + nslack, iterations, options.iteration_limit);
    if (res == PhaseResult::kLimit) return finish(SolveStatus::kLimit);
    Real infeas = 0;
    for (int r = 0; r < nrows; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] >= ny + nslack) infeas += t.rhs(r);
    }
    if (infeas > options.feasibility_tolerance) {
      return finish(SolveStatus::kInfeasible);
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int r = 0; r < nrows; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] < ny + nslack) continue;
      for (int c = 0; c < ny + nslack; ++c) {
        if (std::fabs(t.at(r, c)) > 1e-9L) {
          t.pivot(r, c);
          break;
        }
      }
    }
  }

  std::vector<Real> cost(static_cast<std::size_t>(t.cols), 0);
  for (const LpTerm& term : problem.objective()) {
    const ColumnMap& cm = map[static_cast<std::size_t>(term.var)];
    cost[static_cast<std::size_t>(cm.plus)] += static_cast<Real>(term.coef) * cm.sign;
    if (cm.minus >= 0) cost[static_cast<std::size_t>(cm.minus)] -= term.coef;
  }
  const PhaseResult res =
      run_phase(t, cost, ny + nslack, iterations, options.iteration_limit);
  if (res == PhaseResult::kLimit) return finish(SolveStatus::kLimit);
  if (res == PhaseResult::kUnbounded) return finish(SolveStatus::kUnbounded);

  std::vector<Real> y(static_cast<std::size_t>(t.cols), 0);
  for (int r = 0; r < nrows; ++r) {
    y[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])] = t.rhs(r);
  }
  sol.values.resize(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const ColumnMap& cm = map[k];
    Real x = cm.offset + cm.sign * y[static_cast<std::size_t>(cm.plus)];
    if (cm.minus >= 0) x -= y[static_cast<std::size_t>(cm.minus)];
    sol.values[k] = static_cast<double>(x);
  }
  sol.activities = row_activities(problem, sol.values);
  Real obj = 0;
  for (const LpTerm& term : problem.objective()) {
    obj += static_cast<Real>(term.coef) * sol.values[static_cast<std::size_t>(term.var)];
  }
  sol.objective = static_cast<double>(obj);
  return finish(SolveStatus::kOptimal);
}

}  // namespace rankinglp
