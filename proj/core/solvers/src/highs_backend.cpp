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

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "Highs.h"
#include "rankinglp/backends.hpp"
#include "rankinglp/dense_simplex.hpp"

namespace rankinglp {

namespace {

double to_highs(double value) {
  if (value == kInfinity) return kHighsInf;
  if (value == -kInfinity) return -kHighsInf;
  return value;
}

void configure(Highs& highs, const SolveOptions& options) {
  highs.setOptionValue("output_flag", options.verbose);
  highs.setOptionValue("threads", 1);
  highs.setOptionValue("solver", "simplex");
  highs.setOptionValue("primal_feasibility_tolerance",
                       options.feasibility_tolerance);
  highs.setOptionValue("dual_feasibility_tolerance",
                       options.feasibility_tolerance);
  if (std::isfinite(options.time_limit_seconds)) {
    highs.setOptionValue("time_limit", options.time_limit_seconds);
  }
  if (options.iteration_limit < std::numeric_limits<HighsInt>::max()) {
    highs.setOptionValue("simplex_iteration_limit",
                         static_cast<HighsInt>(options.iteration_limit));
  }
}

// Runs the solve and maps HiGHS's model status onto ours. An
// unbounded-or-infeasible verdict from presolve is settled by re-solving
// without presolve.
SolveStatus run(Highs& highs) {
  HighsStatus status = highs.run();
  if (status == HighsStatus::kError) {
    throw BackendFailure("HiGHS run() failed with model status '" +
                         highs.modelStatusToString(highs.getModelStatus()) +
                         "'");
  }
  HighsModelStatus model = highs.getModelStatus();
  if (model == HighsModelStatus::kUnboundedOrInfeasible) {
    highs.setOptionValue("presolve", "off");
    highs.clearSolver();
    status = highs.run();
    if (status == HighsStatus::kError) {
      throw BackendFailure("HiGHS re-solve without presolve failed");
    }
    model = highs.getModelStatus();
  }
  switch (model) {
    case HighsModelStatus::kOptimal:
      return SolveStatus::kOptimal;
    case HighsModelStatus::kInfeasible:
      return SolveStatus::kInfeasible;
    case HighsModelStatus::kUnbounded:
      return SolveStatus::kUnbounded;
    case HighsModelStatus::kTimeLimit:
    case HighsModelStatus::kIterationLimit:
    case HighsModelStatus::kInterrupt:
      return SolveStatus::kLimit;
    default:
      throw BackendFailure("HiGHS ended with model status '" +
                           highs.modelStatusToString(model) + "'");
  }
}

}  // namespace

std::string HighsBackend::id() const {
  return "highs-" + std::to_string(HIGHS_VERSION_MAJOR) + "." +
         std::to_string(HIGHS_VERSION_MINOR) + "." +
         std::to_string(HIGHS_VERSION_PATCH);
}

LpSolution HighsBackend::solve(const LpProblem& problem,
                               const SolveOptions& options) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();

  HighsLp lp;
  lp.num_col_ = problem.num_variables();
  lp.num_row_ = problem.num_constraints();
  lp.sense_ = ObjSense::kMaximize;
  lp.offset_ = 0;
  lp.col_cost_.assign(static_cast<std::size_t>(lp.num_col_), 0.0);
  for (const LpTerm& t : problem.objective()) {
    lp.col_cost_[static_cast<std::size_t>(t.var)] = t.coef;
  }
  for (const LpVariable& v : problem.variables()) {
    lp.col_lower_.push_back(to_highs(v.lower));
    lp.col_upper_.push_back(to_highs(v.upper));
  }
  // Column-wise copy of the matrix.
  HighsSparseMatrix& a = lp.a_matrix_;
  a.format_ = MatrixFormat::kColwise;
  a.num_col_ = lp.num_col_;
  a.num_row_ = lp.num_row_;
  a.start_.assign(static_cast<std::size_t>(lp.num_col_) + 1, 0);
  for (const LpConstraint& row : problem.constraints()) {
    for (const LpTerm& t : row.terms) ++a.start_[static_cast<std::size_t>(t.var) + 1];
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(lp.num_col_); ++c) {
    a.start_[c + 1] += a.start_[c];
  }
  a.index_.resize(problem.num_nonzeros());
  a.value_.resize(problem.num_nonzeros());
  std::vector<HighsInt> fill(a.start_.begin(), a.start_.end() - 1);
  HighsInt r = 0;
  for (const LpConstraint& row : problem.constraints()) {
    for (const LpTerm& t : row.terms) {
      const auto k = static_cast<std::size_t>(fill[static_cast<std::size_t>(t.var)]++);
      a.index_[k] = r;
      a.value_[k] = t.coef;
    }
    ++r;
    switch (row.sense) {
      case RowSense::kLessEqual:
        lp.row_lower_.push_back(-kHighsInf);
        lp.row_upper_.push_back(row.rhs);
        break;
      case RowSense::kGreaterEqual:
        lp.row_lower_.push_back(row.rhs);
        lp.row_upper_.push_back(kHighsInf);
        break;
      case RowSense::kEqual:
        lp.row_lower_.push_back(row.rhs);
        lp.row_upper_.push_back(row.rhs);
        break;
    }
  }

  Highs highs;
  configure(highs, options);
  if (highs.passModel(std::move(lp)) == HighsStatus::kError) {
    throw BackendFailure("HiGHS rejected the model");
  }

  LpSolution sol;
  sol.backend = id();
  sol.status = run(highs);
  sol.iterations = highs.getInfo().simplex_iteration_count;
  if (sol.optimal()) {
    const HighsSolution& hs = highs.getSolution();
    sol.values = hs.col_value;
    sol.activities = row_activities(problem, sol.values);
    sol.objective = highs.getInfo().objective_function_value;
  }
  sol.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return sol;
}

LpSolution HighsBackend::solve_file(const std::filesystem::path& path,
                                    const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Highs highs;
  configure(highs, options);
  if (highs.readModel(path.string()) == HighsStatus::kError) {
    throw BackendFailure("HiGHS could not read " + path.string());
  }
  LpSolution sol;
  sol.backend = id();
  sol.status = run(highs);
  if (sol.optimal()) {
    sol.values = highs.getSolution().col_value;
    sol.objective = highs.getInfo().objective_function_value;
  }
  sol.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return sol;
}

std::vector<std::string> backend_ids() { return {"highs", "dense"}; }

std::unique_ptr<LpBackend> make_backend(std::string_view id) {
  if (id == "highs") return std::make_unique<HighsBackend>();
  if (id == "dense") return std::make_unique<DenseSimplexBackend>();
  throw InvalidArgument("unknown LP backend '" + std::string(id) +
                        "' (expected highs or dense)");
}

std::unique_ptr<LpBackend> default_backend() {
  const char* env = std::getenv(kSolverEnvVar);
  if (env == nullptr || *env == '\0') return make_backend("highs");
  return make_backend(env);
}

}  // namespace rankinglp
