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


// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls the library's formulas; the only shared types
// are the path and grid containers.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankinglp/grid_paths.hpp"
#include "rankinglp/lp_builders.hpp"
#include "rankinglp/price_grid.hpp"

namespace rankinglp::oracle {

// Exact rational with a positive, reduced denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return {-num_, den_}; }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// All vectors 0 <= b_0 <= ... <= b_{m-1} <= n, with b_m = n appended, by
// plain recursion.
std::vector<std::vector<int>> brute_paths(int m, int n);
// min{i : b_i > j} by linear scan.
int brute_inverse(const std::vector<int>& b, int j);

// A row  sum_col coef[col] x_col <= rhs  over the builders' column layout.
struct RationalRow {
  std::map<int, Rational> coef;
  Rational rhs;

  friend bool operator==(const RationalRow&, const RationalRow&) = default;
};

std::string describe(const RationalRow& row);
// Divides the numerators by the denominator and drops zeros.
RationalRow to_rational(const ExactRow& row);

// Rows expanded term by term from the textbook statement of each family,
// with boundary cells substituted by their fixed values.
RationalRow lower_gamma_row(int m, int n, const std::vector<int>& b,
                            const std::vector<int>& h_columns);
RationalRow lower_h_row(int m, int n, const std::vector<int>& b, int i, int j,
                        int h_column);
RationalRow upper_row(int m, int n, const std::vector<int>& a,
                      const std::vector<int>& b);

// Direct evaluations of the same expressions at a grid.
double lower_value(const PriceGrid& g, const std::vector<int>& b);
double upper_value(const PriceGrid& g, const std::vector<int>& a,
                   const std::vector<int>& b);

// The dual-gain objective of the step functions f(x, y) = g(floor(m x),
// floor(n y)), alpha(x) = a_{floor(m x)} / n, beta likewise, computed by
// midpoint sampling with `samples` points per cell side. Every integrand is
// cell-constant, so any positive sample count is exact up to rounding.
struct Integrals {
  double match = 0;
  double u_gain = 0;
  double v_early = 0;
  double v_late = 0;
  double total() const { return match + u_gain + v_early + v_late; }
};
Integrals integrate_objective(const PriceGrid& g, const std::vector<int>& a,
                              const std::vector<int>& b, int samples = 3);

}  // namespace rankinglp::oracle
