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


#include "model_check.hpp"

#include <map>
#include <set>

#include "oracles.hpp"
#include "rankinglp/lp_builders.hpp"

namespace rankinglp::oracle {

namespace {

constexpr std::size_t kMaxReports = 8;

void report(ModelCheck& out, std::string what) {
  if (out.mismatches.size() < kMaxReports) out.mismatches.push_back(std::move(what));
}

std::vector<int> vals(const MonotonePath& p) {
  return {p.values().begin(), p.values().end()};
}

// Exact numerators first, then the doubles handed to the solver, which must
// be the correctly rounded values of the same rationals.
void compare(ModelCheck& out, const std::string& label, const RationalRow& expect,
             const ExactRow& exact, const LpConstraint& assembled) {
  ++out.rows;
  out.terms += expect.coef.size();
  const RationalRow got = to_rational(exact);
  if (!(got == expect)) {
    report(out, label + ": exact row " + describe(got) + " expected " + describe(expect));
    return;
  }
  bool same = assembled.sense == RowSense::kLessEqual &&
              assembled.terms.size() == expect.coef.size() &&
              assembled.rhs == expect.rhs.to_double();
  if (same) {
    auto it = expect.coef.begin();
    for (const LpTerm& t : assembled.terms) {
      same = same && t.var == it->first && t.coef == it->second.to_double();
      ++it;
    }
  }
  if (!same) report(out, label + ": assembled row differs from " + describe(expect));
}

void check_grid(ModelCheck& out, const LpProblem& problem, GridDims dims,
                std::size_t first_row) {
  const int m = dims.m();
  const int n = dims.n();
  const auto& vars = problem.variables();
  if (!(vars[0].lower == -kInfinity && vars[0].upper == kInfinity)) report(out, "gamma bounds");
  for (int c = 1; c < 1 + m * n; ++c) {
    if (!(vars[static_cast<std::size_t>(c)].lower == 0 &&
          vars[static_cast<std::size_t>(c)].upper == 1)) {
      report(out, "bounds of column " + std::to_string(c));
    }
  }
  // g(i, j) <= g(i, j + 1) and g(i + 1, j) <= g(i, j) over interior cells.
  std::set<std::pair<int, int>> expect;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j + 1 < n; ++j) expect.insert({1 + i * n + j, 1 + i * n + j + 1});
  }
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j < n; ++j) expect.insert({1 + (i + 1) * n + j, 1 + i * n + j});
  }
  std::set<std::pair<int, int>> got;
  const auto& rows = problem.constraints();
  for (std::size_t r = first_row; r < rows.size(); ++r) {
    const LpConstraint& row = rows[r];
    ++out.rows;
    if (row.terms.size() != 2 || row.rhs != 0 || row.sense != RowSense::kLessEqual) {
      report(out, "monotonicity row " + row.name);
      continue;
    }
    const LpTerm& x = row.terms[0];
    const LpTerm& y = row.terms[1];
    if (x.coef == 1 && y.coef == -1) {
      got.insert({x.var, y.var});
    } else if (x.coef == -1 && y.coef == 1) {
      got.insert({y.var, x.var});
    } else {
      report(out, "monotonicity row " + row.name);
    }
  }
  if (got != expect) report(out, "monotonicity rows differ");
}

}  // namespace

ModelCheck check_lower_model(GridDims dims) {
  const int m = dims.m();
  const int n = dims.n();
  ModelCheck out;
  const FamilyLp lp = build_lower_lp(dims);
  const auto& paths = lp.members.paths();
  const auto brute = brute_paths(m, n);
  std::set<std::vector<int>> have;
  for (const auto& p : paths) have.insert(vals(p));
  if (have != std::set<std::vector<int>>(brute.begin(), brute.end())) {
    report(out, "member set is not the set of all paths");
  }

  const auto& rows = lp.problem.constraints();
  const int first_h = 1 + m * n;
  std::size_t r = 0;
  for (std::size_t p = 0; p < paths.size(); ++p, ++r) {
    std::vector<int> h(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) h[static_cast<std::size_t>(i)] = first_h + static_cast<int>(p) * m + i;
    compare(out, "gamma row of " + paths[p].to_string(),
            lower_gamma_row(m, n, vals(paths[p]), h), rankinglp::lower_gamma_row(paths[p], h),
            rows[r]);
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto b = vals(paths[p]);
    const InversePath inv = inverse(paths[p]);
    for (int i = 0; i < m; ++i) {
      const int hc = first_h + static_cast<int>(p) * m + i;
      for (int j = b[static_cast<std::size_t>(i)]; j <= n; ++j, ++r) {
        compare(out,
                "h row " + std::to_string(i) + "," + std::to_string(j) + " of " +
                    paths[p].to_string(),
                lower_h_row(m, n, b, i, j, hc),
                rankinglp::lower_h_row(paths[p], inv, i, j, hc), rows[r]);
      }
    }
  }
  const auto h_count = static_cast<std::size_t>(m) * paths.size();
  if (lp.problem.variables().size() != static_cast<std::size_t>(first_h) + h_count) {
    report(out, "column count");
  }
  check_grid(out, lp.problem, dims, r);
  return out;
}

ModelCheck check_upper_model(GridDims dims) {
  const int m = dims.m();
  const int n = dims.n();
  ModelCheck out;
  const FamilyLp lp = build_upper_lp_full(dims);
  const auto& pairs = lp.members.pairs();
  const auto brute = brute_paths(m, n);
  std::set<std::pair<std::vector<int>, std::vector<int>>> expect;
  for (const auto& a : brute) {
    for (const auto& b : brute) {
      bool dominant = true;
      for (std::size_t i = 0; i < a.size(); ++i) dominant = dominant && a[i] >= b[i];
      if (dominant) expect.insert({a, b});
    }
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> have;
  for (const auto& p : pairs) have.insert({vals(p.a()), vals(p.b())});
  if (have != expect) report(out, "member set is not the set of dominant pairs");

  const auto& rows = lp.problem.constraints();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    compare(out, "row of " + pairs[k].to_string(),
            upper_row(m, n, vals(pairs[k].a()), vals(pairs[k].b())),
            upper_pair_row(pairs[k]), rows[k]);
  }
  if (lp.problem.variables().size() != static_cast<std::size_t>(1 + m * n)) {
    report(out, "column count");
  }
  check_grid(out, lp.problem, dims, pairs.size());
  return out;
}

}  // namespace rankinglp::oracle
