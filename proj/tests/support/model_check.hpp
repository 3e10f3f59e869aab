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


// Term-by-term comparison of generated models against the oracle rows.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankinglp/grid_paths.hpp"

namespace rankinglp::oracle {

struct ModelCheck {
  std::uint64_t rows = 0;
  std::uint64_t terms = 0;
  std::vector<std::string> mismatches;  // first few only
  bool ok() const { return mismatches.empty() && rows > 0; }
};

// The full lower model at `dims`: every member, gamma row, h row and
// monotonicity row, both as exact numerators and as assembled doubles.
ModelCheck check_lower_model(GridDims dims);
// Same for the full upper model.
ModelCheck check_upper_model(GridDims dims);

}  // namespace rankinglp::oracle
