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

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rankinglp/lp_problem.hpp"

namespace rankinglp {

// Simplex through HiGHS, single-threaded and silent unless verbose.
class HighsBackend : public LpBackend {
 public:
  std::string id() const override;
  using LpBackend::solve;
  LpSolution solve(const LpProblem& problem,
                   const SolveOptions& options) override;

  // Reads a model file with HiGHS's own parser and solves it. Only status,
  // objective, and values are filled in.
  LpSolution solve_file(const std::filesystem::path& path,
                        const SolveOptions& options = {});
};

inline constexpr const char* kSolverEnvVar = "RANKINGLP_SOLVER";

std::vector<std::string> backend_ids();
// "highs" or "dense". Throws InvalidArgument for anything else.
std::unique_ptr<LpBackend> make_backend(std::string_view id);
// Backend named by RANKINGLP_SOLVER, or HiGHS when it is unset.
std::unique_ptr<LpBackend> default_backend();

}  // namespace rankinglp
