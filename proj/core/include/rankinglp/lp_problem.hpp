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

// Backend-agnostic linear programs and the solver contract.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankinglp/errors.hpp"
#include "rankinglp/grid_paths.hpp"

namespace rankinglp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

enum class Family { kLower, kUpper };

std::string_view family_name(Family family);
Family parse_family(std::string_view text);

struct LpVariable {
  std::string name;
  double lower = 0;
  double upper = kInfinity;
};

struct LpTerm {
  int var = 0;
  double coef = 0;

  friend bool operator==(const LpTerm&, const LpTerm&) = default;
};

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;  // sorted by var, no duplicates, no zeros
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0;
};

struct LpMetadata {
  std::optional<GridDims> dims;
  std::optional<Family> family;
  std::string generator = "rankinglp";
};

struct ModelSize {
  std::uint64_t variables = 0;
  std::uint64_t constraints = 0;
  std::uint64_t nonzeros = 0;
  bool estimated = false;  // nonzeros is an upper estimate, not a count

  // Rough resident size of the model inside a simplex backend.
  double projected_bytes() const;
  std::string to_string() const;
};

// A model that would exceed the configured memory cap.
class ResourceRefusal : public Error {
 public:
  ResourceRefusal(const std::string& what, ModelSize size)
      : Error(what), size_(size) {}
  const ModelSize& size() const { return size_; }

 private:
  ModelSize size_;
};

struct BuildLimits {
  double max_model_bytes = 8.0 * 1024 * 1024 * 1024;  // laptop profile
  bool force = false;

  // Throws ResourceRefusal when `size` exceeds the cap and force is unset.
  void check(const ModelSize& size, std::string_view what) const;
};

// Maximize sum_j c_j x_j subject to rows and column bounds.
class LpProblem {
 public:
  int add_variable(std::string name, double lower, double upper);
  // Terms are sorted and merged; exact zeros are dropped.
  int add_constraint(std::string name, std::vector<LpTerm> terms,
                     RowSense sense, double rhs);
  void set_objective(std::vector<LpTerm> terms);

  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<LpTerm>& objective() const { return objective_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  std::uint64_t num_nonzeros() const;
  ModelSize size() const;

  LpMetadata& metadata() { return metadata_; }
  const LpMetadata& metadata() const { return metadata_; }

  // Every reference is to a declared variable and every number is finite
  // (bounds may be infinite). Throws InvalidArgument otherwise.
  void validate() const;

  void reserve_constraints(std::size_t count) { constraints_.reserve(count); }

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::vector<LpTerm> objective_;
  LpMetadata metadata_;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kLimit };

std::string_view status_name(SolveStatus status);

struct LpSolution {
  SolveStatus status = SolveStatus::kLimit;
  double objective = 0;
  std::vector<double> values;      // per variable
  std::vector<double> activities;  // per constraint: sum of terms at values
  std::string backend;
  double seconds = 0;
  std::int64_t iterations = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
  // Signed distance to the row's bound; zero means binding.
  double slack(const LpProblem& problem, int row) const;
};

// Fills activities from values.
std::vector<double> row_activities(const LpProblem& problem,
                                   const std::vector<double>& values);

// Largest violation of any row or bound at `values`.
double max_violation(const LpProblem& problem,
                     const std::vector<double>& values);

struct SolveOptions {
  double time_limit_seconds = kInfinity;
  std::int64_t iteration_limit = std::numeric_limits<std::int64_t>::max();
  double feasibility_tolerance = 1e-7;
  bool verbose = false;
};

// Load, solve, and report values and activities. Implementations return a
// definitive status or kLimit; anything else is a BackendFailure.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string id() const = 0;
  virtual LpSolution solve(const LpProblem& problem,
                           const SolveOptions& options) = 0;
  LpSolution solve(const LpProblem& problem) { return solve(problem, {}); }
};

}  // namespace rankinglp
