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

#include "rankinglp/price_grid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rankinglp/errors.hpp"

namespace rankinglp {

PriceGrid::PriceGrid(GridDims dims)
    : dims_(dims),
      values_(static_cast<std::size_t>((dims.m() + 1) * (dims.n() + 1)), 0.0) {
  for (int i = 0; i <= dims.m(); ++i) at(i, dims.n()) = 1.0;
}

PriceGrid PriceGrid::from_values(GridDims dims, std::vector<double> values,
                                 double tolerance) {
  const auto expected =
      static_cast<std::size_t>((dims.m() + 1) * (dims.n() + 1));
  if (values.size() != expected) {
    throw InvalidArgument("price grid " + dims.to_string() + " needs " +
                          std::to_string(expected) + " values, got " +
                          std::to_string(values.size()));
  }
  PriceGrid grid(dims);
  grid.values_ = std::move(values);
  if (auto why = grid.violation(tolerance)) {
    throw InvalidArgument("infeasible price grid: " + *why);
  }
  return grid;
}

void PriceGrid::set(int i, int j, double value) {
  if (i < 0 || i >= dims_.m() || j < 0 || j >= dims_.n()) {
    throw InvalidArgument("g(" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not an interior entry");
  }
  at(i, j) = value;
}

std::optional<std::string> PriceGrid::violation(double tolerance) const {
  const int m = dims_.m();
  const int n = dims_.n();
  std::ostringstream why;
  for (int i = 0; i <= m; ++i) {
    if ((*this)(i, n) != 1.0) {
      why << "g(" << i << "," << n << ") = " << (*this)(i, n) << " != 1";
      return why.str();
    }
  }
  for (int j = 0; j < n; ++j) {
    if ((*this)(m, j) != 0.0) {
      why << "g(" << m << "," << j << ") = " << (*this)(m, j) << " != 0";
      return why.str();
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = (*this)(i, j);
      if (v < -tolerance || v > 1.0 + tolerance) {
        why << "g(" << i << "," << j << ") = " << v << " outside [0,1]";
        return why.str();
      }
    }
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) > (*this)(i, j + 1) + tolerance) {
        why << "g(" << i << "," << j << ") > g(" << i << "," << j + 1 << ")";
        return why.str();
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if ((*this)(i, j) + tolerance < (*this)(i + 1, j)) {
        why << "g(" << i << "," << j << ") < g(" << i + 1 << "," << j << ")";
        return why.str();
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> PriceGrid::rank_plateaus() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < dims_.m(); ++i) {
    for (int j = 0; j + 1 < dims_.n(); ++j) {
      if ((*this)(i, j) == (*this)(i, j + 1)) out.emplace_back(i, j);
    }
  }
  return out;
}

PriceGrid random_price_grid(GridDims dims, std::mt19937_64& rng) {
  const int m = dims.m();
  const int n = dims.n();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> block(m, std::vector<double>(n));
  for (auto& row : block) {
    for (double& v : row) v = unit(rng);
    std::sort(row.begin(), row.end());
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> column(m);
    for (int i = 0; i < m; ++i) column[i] = block[i][j];
    std::sort(column.begin(), column.end(), std::greater<>());
    for (int i = 0; i < m; ++i) block[i][j] = column[i];
  }
  PriceGrid grid(dims);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) grid.set(i, j, block[i][j]);
  }
  return grid;
}

}  // namespace rankinglp
