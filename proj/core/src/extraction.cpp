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

#include "rankinglp/extraction.hpp"

#include <algorithm>
#include <vector>

#include "rankinglp/lp_builders.hpp"

namespace rankinglp {

void isotonic_non_decreasing(std::span<double> values) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  for (double v : values) {
    blocks.push_back({v, 1});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].mean() > blocks.back().mean()) {
      Block top = blocks.back();
      blocks.pop_back();
      blocks.back().sum += top.sum;
      blocks.back().count += top.count;
    }
  }
  std::size_t k = 0;
  for (const Block& b : blocks) {
    const double mean = b.mean();
    for (std::size_t c = 0; c < b.count; ++c) values[k++] = mean;
  }
}

PriceGrid extract_price_grid(const LpSolution& solution, GridDims dims,
                             double tolerance) {
  if (!solution.optimal()) {
    throw InvalidArgument("cannot extract a price grid from a '" +
                          std::string(status_name(solution.status)) +
                          "' solution");
  }
  const int m = dims.m();
  const int n = dims.n();
  if (static_cast<int>(solution.values.size()) < GridColumns::first_free(dims)) {
    throw InvalidArgument("solution has too few columns for grid " +
                          dims.to_string());
  }
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<double> v(static_cast<std::size_t>(m + 1) * stride, 0.0);
  const auto at = [&](int i, int j) -> double& {
    return v[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i <= m; ++i) at(i, n) = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      at(i, j) = solution.values[static_cast<std::size_t>(GridColumns::g(dims, i, j))];
    }
  }
  try {
    (void)PriceGrid::from_values(dims, v, tolerance);
  } catch (const InvalidArgument& e) {
    throw NumericalError(std::string("solution grid is not repairable: ") +
                         e.what());
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = std::clamp(at(i, j), 0.0, 1.0);
  }
  std::vector<double> line;
  for (int round = 0; round < 8; ++round) {
    for (int i = 0; i < m; ++i) {
      isotonic_non_decreasing(std::span<double>(&at(i, 0), static_cast<std::size_t>(n)));
    }
    for (int j = 0; j < n; ++j) {
      // Non-increasing in i is non-decreasing in m - 1 - i.
      line.clear();
      for (int i = m - 1; i >= 0; --i) line.push_back(at(i, j));
      isotonic_non_decreasing(line);
      for (int i = m - 1, k = 0; i >= 0; --i, ++k) at(i, j) = line[static_cast<std::size_t>(k)];
    }
  }
  // Envelope g(i, j) = max over i' >= i, j' <= j: monotone by construction
  // and a no-op when the passes above already converged.
  for (int i = m - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      double best = at(i, j);
      if (j > 0) best = std::max(best, at(i, j - 1));
      if (i + 1 < m) best = std::max(best, at(i + 1, j));
      at(i, j) = std::clamp(best, 0.0, 1.0);
    }
  }
  return PriceGrid::from_values(dims, std::move(v), 0.0);
}

}  // namespace rankinglp
