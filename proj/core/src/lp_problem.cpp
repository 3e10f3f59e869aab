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

#include "rankinglp/lp_problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rankinglp {

std::string_view family_name(Family family) {
  return family == Family::kLower ? "lower" : "upper";
}

Family parse_family(std::string_view text) {
  if (text == "lower") return Family::kLower;
  if (text == "upper") return Family::kUpper;
  throw InvalidArgument("unknown family '" + std::string(text) + "'");
}

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kLimit:
      return "limit";
  }
  return "unknown";
}

double ModelSize::projected_bytes() const {
  // Row-wise and column-wise copies of the matrix plus per-row and
  // per-column work vectors, as a simplex code keeps them.
  return 32.0 * static_cast<double>(nonzeros) +
         96.0 * static_cast<double>(constraints) +
         96.0 * static_cast<double>(variables);
}

std::string ModelSize::to_string() const {
  std::ostringstream out;
  out << "variables=" << variables << " constraints=" << constraints
      << " nonzeros=" << (estimated ? "<=" : "") << nonzeros
      << " projected_mib=" << projected_bytes() / (1024.0 * 1024.0);
  return out.str();
}

void BuildLimits::check(const ModelSize& size, std::string_view what) const {
  if (force || size.projected_bytes() <= max_model_bytes) return;
  std::ostringstream msg;
  msg << "refusing to build " << what << ": " << size.to_string()
      << " exceeds the cap of " << max_model_bytes / (1024.0 * 1024.0)
      << " MiB (use --force to override)";
  throw ResourceRefusal(msg.str(), size);
}

namespace {

std::vector<LpTerm> normalize_terms(std::vector<LpTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LpTerm& x, const LpTerm& y) { return x.var < y.var; });
  std::vector<LpTerm> out;
  out.reserve(terms.size());
  for (const LpTerm& t : terms) {
    if (!out.empty() && out.back().var == t.var) {
      out.back().coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const LpTerm& t) { return t.coef == 0.0; });
  return out;
}

}  // namespace

int LpProblem::add_variable(std::string name, double lower, double upper) {
  variables_.push_back({std::move(name), lower, upper});
  return static_cast<int>(variables_.size()) - 1;
}

int LpProblem::add_constraint(std::string name, std::vector<LpTerm> terms,
                              RowSense sense, double rhs) {
  constraints_.push_back(
      {std::move(name), normalize_terms(std::move(terms)), sense, rhs});
  return static_cast<int>(constraints_.size()) - 1;
}

void LpProblem::set_objective(std::vector<LpTerm> terms) {
  objective_ = normalize_terms(std::move(terms));
}

std::uint64_t LpProblem::num_nonzeros() const {
  std::uint64_t total = 0;
  for (const LpConstraint& row : constraints_) total += row.terms.size();
  return total;
}

ModelSize LpProblem::size() const {
  return {static_cast<std::uint64_t>(variables_.size()),
          static_cast<std::uint64_t>(constraints_.size()), num_nonzeros(),
          false};
}

void LpProblem::validate() const {
  const int nvars = num_variables();
  for (const LpVariable& v : variables_) {
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper) {
      throw InvalidArgument("variable " + v.name + " has invalid bounds");
    }
  }
  auto check_terms = [&](const std::vector<LpTerm>& terms,
                         const std::string& where) {
    for (const LpTerm& t : terms) {
      if (t.var < 0 || t.var >= nvars) {
        throw InvalidArgument(where + " references undeclared variable " +
                              std::to_string(t.var));
      }
      if (!std::isfinite(t.coef)) {
        throw InvalidArgument(where + " has a non-finite coefficient");
      }
    }
  };
  check_terms(objective_, "objective");
  for (const LpConstraint& row : constraints_) {
    check_terms(row.terms, "constraint " + row.name);
    if (!std::isfinite(row.rhs)) {
      throw InvalidArgument("constraint " + row.name + " has non-finite rhs");
    }
  }
}

double LpSolution::slack(const LpProblem& problem, int row) const {
  const LpConstraint& c = problem.constraints()[static_cast<std::size_t>(row)];
  const double act = activities[static_cast<std::size_t>(row)];
  switch (c.sense) {
    case RowSense::kLessEqual:
      return c.rhs - act;
    case RowSense::kGreaterEqual:
      return act - c.rhs;
    case RowSense::kEqual:
      return -std::abs(act - c.rhs);
  }
  return 0;
}

std::vector<double> row_activities(const LpProblem& problem,
                                   const std::vector<double>& values) {
  std::vector<double> out;
  out.reserve(problem.constraints().size());
  for (const LpConstraint& row : problem.constraints()) {
    double act = 0;
    for (const LpTerm& t : row.terms) act += t.coef * values[t.var];
    out.push_back(act);
  }
  return out;
}

double max_violation(const LpProblem& problem,
                     const std::vector<double>& values) {
  double worst = 0;
  for (std::size_t k = 0; k < problem.variables().size(); ++k) {
    const LpVariable& v = problem.variables()[k];
    worst = std::max({worst, v.lower - values[k], values[k] - v.upper});
  }
  const std::vector<double> acts = row_activities(problem, values);
  for (std::size_t r = 0; r < acts.size(); ++r) {
    const LpConstraint& c = problem.constraints()[r];
    switch (c.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, acts[r] - c.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, c.rhs - acts[r]);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(acts[r] - c.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace rankinglp
