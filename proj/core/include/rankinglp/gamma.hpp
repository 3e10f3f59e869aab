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

// Evaluators for the dual-gain objective on grid data.
//
// For a price grid g and threshold paths, every integrand of the objective
// is constant on grid cells, so all quantities below are exact finite sums.
// With b^- the inverse of b:
//
//   L(g, b)    = (1/n) sum_j (1 - b^-_j/m) g(b^-_j, j) - (1/m) sum_i b_i/n
//              + (1/m) sum_i min_{b_i <= j <= n} bracket(g, b, i, j)
//   U(g, a, b) = (1/m) sum_i (a_i - b_i)/n
//              + (1/m) sum_i (1 - a_i/n + b_i/n) (1 - g(i+1, a_i))
//              + (1/n) sum_j (1 - b^-_j/m) g(b^-_j, j+1)
//              + (1/m) sum_i (1/n) sum_{j >= a_i, b^-_j < m} g(b^-_j, j+1)
//
// The last sum skips ranks whose inverse is m: those read the right edge,
// where the price is 0, so the corner g(m, n) never enters U.
//
// and gamma_exact() is the objective itself, which reads g(i, a_i) and
// g(b^-_j, j). For every feasible g and dominant pair,
// L(g, b) <= gamma_exact(g, a, b) <= U(g, a, b).

#pragma once

#include <span>

#include "rankinglp/grid_paths.hpp"
#include "rankinglp/price_grid.hpp"

namespace rankinglp {

struct GammaBreakdown {
  double match_term = 0;    // (u, v) matched to each other
  double u_term = 0;        // u matched elsewhere
  double v_early_term = 0;  // v matched before u arrives
  double v_late_term = 0;   // v left unmatched by u
  double total = 0;
};

// j/n + (1 - j/n + b_i/n) (1 - g(i, j)) + (1/n) sum_{k=j}^{n-1} g(b^-_k, k).
// Requires 0 <= i < m and b_i <= j <= n.
double lower_bracket(const PriceGrid& g, const MonotonePath& b, int i, int j);

double eval_lower(const PriceGrid& g, const MonotonePath& b);
double eval_upper(const PriceGrid& g, const PathPair& pair);

// `alpha` holds a_0..a_{m-1} (an optional trailing a_m is ignored) and need
// not be monotone, but must satisfy b_i <= a_i <= n.
GammaBreakdown gamma_exact(const PriceGrid& g, std::span<const int> alpha,
                           const MonotonePath& beta);
GammaBreakdown gamma_exact(const PriceGrid& g, const PathPair& pair);

}  // namespace rankinglp
