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

#include <span>

#include "rankinglp/lp_problem.hpp"
#include "rankinglp/price_grid.hpp"

namespace rankinglp {

inline constexpr double kRepairTolerance = 1e-6;

// Reads the interior g columns of an optimal solution (column layout of
// lp_builders.hpp) into a feasible grid. Bound and monotonicity violations
// up to `tolerance` are repaired by clamping and isotonic regression along
// rows and columns; anything larger throws NumericalError. A non-optimal
// solution throws InvalidArgument.
PriceGrid extract_price_grid(const LpSolution& solution, GridDims dims,
                             double tolerance = kRepairTolerance);

// Least-squares non-decreasing fit (pool adjacent violators), in place.
void isotonic_non_decreasing(std::span<double> values);

}  // namespace rankinglp
