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

#include <cstddef>

#include "rankinglp/lp_problem.hpp"

namespace rankinglp {

// Two-phase tableau simplex with Bland's rule, in long double. Cost is
// O(rows * columns) memory and far worse time, so it refuses anything above
// `max_cells` tableau entries. Meant as an independent oracle on tiny
// models, not as a production backend.
class DenseSimplexBackend : public LpBackend {
 public:
  explicit DenseSimplexBackend(std::size_t max_cells = 4'000'000)
      : max_cells_(max_cells) {}

  std::string id() const override { return "dense"; }
  using LpBackend::solve;
  LpSolution solve(const LpProblem& problem,
                   const SolveOptions& options) override;

 private:
  std::size_t max_cells_;
};

}  // namespace rankinglp
