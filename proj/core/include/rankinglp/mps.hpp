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

// Free-format MPS with an OBJSENSE MAX section. Numbers are written with 17
// significant digits, so a write/read cycle reproduces every coefficient
// bit for bit.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "rankinglp/lp_problem.hpp"

namespace rankinglp {

void write_mps(const LpProblem& problem, std::ostream& out);
void write_mps(const LpProblem& problem, const std::filesystem::path& path);

// Accepts the subset of free MPS that write_mps() emits plus the usual
// bound types (UP, LO, FX, FR, MI, PL). RANGES and integer markers are
// rejected. A minimization objective is negated, since LpProblem always
// maximizes. Throws InvalidArgument on malformed input.
LpProblem read_mps(std::istream& in);
LpProblem read_mps(const std::filesystem::path& path);

}  // namespace rankinglp
