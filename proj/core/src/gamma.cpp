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

#include "rankinglp/gamma.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "rankinglp/errors.hpp"

namespace rankinglp {

namespace {

void require_same_grid(const PriceGrid& g, const GridDims& dims) {
  if (g.dims() != dims) {
    throw InvalidArgument("price grid " + g.dims().to_string() +
                          " does not match path grid " + dims.to_string());
  }
}

// suffix[j] = sum_{k=j}^{n-1} g(b^-_k, k + shift), suffix[n] = 0.
std::vector<double> inverse_suffix_sums(const PriceGrid& g,
                                        const InversePath& inv, int shift) {
  const int n = g.dims().n();
  std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 0.0);
  // Ranks whose inverse is m read the right edge, where f vanishes. With
  // shift 1 the last of them would otherwise pick up the corner g(m, n).
  const int m = g.dims().m();
  for (int k = n - 1; k >= 0; --k) {
    suffix[k] = suffix[k + 1] + (inv[k] == m ? 0.0 : g(inv[k], k + shift));
  }
  return suffix;
}

double bracket_value(const PriceGrid& g, int b_i, int i, int j,
                     const std::vector<double>& suffix) {
  const double n = g.dims().n();
  return j / n + (1.0 - j / n + b_i / n) * (1.0 - g(i, j)) + suffix[j] / n;
}

}  // namespace

double lower_bracket(const PriceGrid& g, const MonotonePath& b, int i, int j) {
  require_same_grid(g, b.dims());
  if (i < 0 || i >= b.dims().m()) {
    throw InvalidArgument("stage " + std::to_string(i) + " outside [0, m)");
  }
  if (j < b[i] || j > b.dims().n()) {
    throw InvalidArgument("rank " + std::to_string(j) + " outside [b_i, n] = [" +
                          std::to_string(b[i]) + ", " +
                          std::to_string(b.dims().n()) + "]");
  }
  const std::vector<double> suffix = inverse_suffix_sums(g, inverse(b), 0);
  return bracket_value(g, b[i], i, j, suffix);
}

double eval_lower(const PriceGrid& g, const MonotonePath& b) {
  require_same_grid(g, b.dims());
  const int m = b.dims().m();
  const int n = b.dims().n();
  const InversePath inv = inverse(b);
  const std::vector<double> suffix = inverse_suffix_sums(g, inv, 0);

  double early = 0;
  for (int j = 0; j < n; ++j) {
    early += (1.0 - static_cast<double>(inv[j]) / m) * g(inv[j], j);
  }
  double area = 0;
  double brackets = 0;
  for (int i = 0; i < m; ++i) {
    area += b[i];
    double best = std::numeric_limits<double>::infinity();
    for (int j = b[i]; j <= n; ++j) {
      best = std::min(best, bracket_value(g, b[i], i, j, suffix));
    }
    brackets += best;
  }
  return early / n - area / (static_cast<double>(m) * n) + brackets / m;
}

double eval_upper(const PriceGrid& g, const PathPair& pair) {
  require_same_grid(g, pair.dims());
  const MonotonePath& a = pair.a();
  const MonotonePath& b = pair.b();
  const int m = a.dims().m();
  const int n = a.dims().n();
  const double inv_n = 1.0 / n;
  const InversePath inv = inverse(b);
  const std::vector<double> suffix = inverse_suffix_sums(g, inv, 1);

  double match = 0;
  double u_gain = 0;
  double late = 0;
  for (int i = 0; i < m; ++i) {
    match += (a[i] - b[i]) * inv_n;
    u_gain += (1.0 - a[i] * inv_n + b[i] * inv_n) * (1.0 - g(i + 1, a[i]));
    late += suffix[a[i]] * inv_n;
  }
  double early = 0;
  for (int j = 0; j < n; ++j) {
    early += (1.0 - static_cast<double>(inv[j]) / m) * g(inv[j], j + 1);
  }
  return match / m + u_gain / m + early * inv_n + late / m;
}

GammaBreakdown gamma_exact(const PriceGrid& g, std::span<const int> alpha,
                           const MonotonePath& beta) {
  require_same_grid(g, beta.dims());
  const int m = beta.dims().m();
  const int n = beta.dims().n();
  if (static_cast<int>(alpha.size()) < m) {
    throw InvalidArgument("alpha needs one entry per stage");
  }
  for (int i = 0; i < m; ++i) {
    if (alpha[i] < beta[i] || alpha[i] > n) {
      throw InvalidArgument("alpha_" + std::to_string(i) + " = " +
                            std::to_string(alpha[i]) + " outside [b_i, n]");
    }
  }
  const double inv_n = 1.0 / n;
  const InversePath inv = inverse(beta);
  const std::vector<double> suffix = inverse_suffix_sums(g, inv, 0);

  GammaBreakdown out;
  for (int i = 0; i < m; ++i) {
    const int a = alpha[i];
    out.match_term += (a - beta[i]) * inv_n;
    out.u_term += (1.0 - a * inv_n + beta[i] * inv_n) * (1.0 - g(i, a));
    out.v_late_term += suffix[a] * inv_n;
  }
  out.match_term /= m;
  out.u_term /= m;
  out.v_late_term /= m;
  for (int j = 0; j < n; ++j) {
    out.v_early_term += (1.0 - static_cast<double>(inv[j]) / m) * g(inv[j], j);
  }
  out.v_early_term *= inv_n;
  out.total = out.match_term + out.u_term + out.v_early_term + out.v_late_term;
  return out;
}

GammaBreakdown gamma_exact(const PriceGrid& g, const PathPair& pair) {
  return gamma_exact(g, pair.a().values(), pair.b());
}

}  // namespace rankinglp
