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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rankinglp::oracle {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t d = std::gcd(num, den);
  num_ = d ? num / d : 0;
  den_ = d ? den / d : 1;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_)
                   : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  const std::int64_t a = std::gcd(num_, o.den_);
  const std::int64_t b = std::gcd(o.num_, den_);
  const std::int64_t x = a ? a : 1;
  const std::int64_t y = b ? b : 1;
  return {(num_ / x) * (o.num_ / y), (den_ / y) * (o.den_ / x)};
}

namespace {

void extend(int m, int n, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == m) {
    std::vector<int> b = prefix;
    b.push_back(n);
    out.push_back(std::move(b));
    return;
  }
  const int lo = prefix.empty() ? 0 : prefix.back();
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend(m, n, prefix, out);
    prefix.pop_back();
  }
}

int gamma_col() { return 0; }
int cell_col(int n, int i, int j) { return 1 + i * n + j; }

// Accumulates  x_0 <= constant + sum coef * g(i, j) + sum coef * x_k , then
// flips it into row form.
class Upper {
 public:
  Upper(int m, int n, int lhs_col) : m_(m), n_(n) { row_.coef[lhs_col] = Rational(1); }

  void constant(const Rational& c) { row_.rhs += c; }
  void cell(int i, int j, const Rational& c) {
    if (j == n_) {
      row_.rhs += c;  // g(i, n) = 1, including the corner
    } else if (i == m_) {
      // g(m, j) = 0
    } else {
      row_.coef[cell_col(n_, i, j)] -= c;
    }
  }
  void column(int col, const Rational& c) { row_.coef[col] -= c; }

  RationalRow finish() && {
    for (auto it = row_.coef.begin(); it != row_.coef.end();) {
      it = it->second == Rational(0) ? row_.coef.erase(it) : std::next(it);
    }
    return std::move(row_);
  }

 private:
  int m_;
  int n_;
  RationalRow row_;
};

double cell_value(const PriceGrid& g, int i, int j) { return g(i, j); }

}  // namespace

std::vector<std::vector<int>> brute_paths(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend(m, n, prefix, out);
  return out;
}

int brute_inverse(const std::vector<int>& b, int j) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > j) return static_cast<int>(i);
  }
  throw std::logic_error("inverse undefined");
}

std::string describe(const RationalRow& row) {
  std::ostringstream s;
  for (const auto& [col, c] : row.coef) s << c.to_string() << "*x" << col << " ";
  s << "<= " << row.rhs.to_string();
  return s.str();
}

RationalRow to_rational(const ExactRow& row) {
  RationalRow out;
  for (const auto& [col, num] : row.terms) {
    if (num != 0) out.coef[col] = Rational(num, row.denominator);
  }
  out.rhs = Rational(row.rhs, row.denominator);
  return out;
}

RationalRow lower_gamma_row(int m, int n, const std::vector<int>& b,
                            const std::vector<int>& h_columns) {
  Upper u(m, n, gamma_col());
  for (int j = 0; j < n; ++j) {
    const int k = brute_inverse(b, j);
    u.cell(k, j, Rational(1, n) * Rational(m - k, m));
  }
  for (int i = 0; i < m; ++i) {
    u.constant(-Rational(b[i], m * n));
    u.column(h_columns[i], Rational(1, m));
  }
  return std::move(u).finish();
}

RationalRow lower_h_row(int m, int n, const std::vector<int>& b, int i, int j,
                        int h_column) {
  Upper u(m, n, h_column);
  const Rational w = Rational(n - j + b[i], n);
  u.constant(Rational(j, n));
  u.constant(w);
  u.cell(i, j, -w);
  for (int k = j; k < n; ++k) u.cell(brute_inverse(b, k), k, Rational(1, n));
  return std::move(u).finish();
}

RationalRow upper_row(int m, int n, const std::vector<int>& a,
                      const std::vector<int>& b) {
  Upper u(m, n, gamma_col());
  for (int i = 0; i < m; ++i) {
    u.constant(Rational(a[i] - b[i], m * n));
    const Rational w = Rational(1, m) * Rational(n - a[i] + b[i], n);
    u.constant(w);
    u.cell(i + 1, a[i], -w);
  }
  for (int j = 0; j < n; ++j) {
    const int k = brute_inverse(b, j);
    u.cell(k, j + 1, Rational(1, n) * Rational(m - k, m));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = a[i]; j < n; ++j) {
      const int k = brute_inverse(b, j);
      if (k == m) continue;  // right edge: price 0
      u.cell(k, j + 1, Rational(1, m * n));
    }
  }
  return std::move(u).finish();
}

double lower_value(const PriceGrid& g, const std::vector<int>& b) {
  const int m = g.dims().m();
  const int n = g.dims().n();
  double v = 0;
  for (int j = 0; j < n; ++j) {
    const int k = brute_inverse(b, j);
    v += (1.0 - static_cast<double>(k) / m) * cell_value(g, k, j) / n;
  }
  for (int i = 0; i < m; ++i) {
    v -= static_cast<double>(b[i]) / (m * n);
    double best = std::numeric_limits<double>::infinity();
    for (int j = b[i]; j <= n; ++j) {
      double s = static_cast<double>(j) / n +
                 (1.0 - static_cast<double>(j) / n + static_cast<double>(b[i]) / n) *
                     (1.0 - cell_value(g, i, j));
      for (int k = j; k < n; ++k) s += cell_value(g, brute_inverse(b, k), k) / n;
      best = std::min(best, s);
    }
    v += best / m;
  }
  return v;
}

double upper_value(const PriceGrid& g, const std::vector<int>& a,
                   const std::vector<int>& b) {
  const int m = g.dims().m();
  const int n = g.dims().n();
  double v = 0;
  for (int i = 0; i < m; ++i) {
    v += static_cast<double>(a[i] - b[i]) / (m * n);
    v += (1.0 - static_cast<double>(a[i]) / n + static_cast<double>(b[i]) / n) *
         (1.0 - cell_value(g, i + 1, a[i])) / m;
    for (int j = a[i]; j < n; ++j) {
      const int k = brute_inverse(b, j);
      if (k < m) v += cell_value(g, k, j + 1) / (m * n);
    }
  }
  for (int j = 0; j < n; ++j) {
    const int k = brute_inverse(b, j);
    v += (1.0 - static_cast<double>(k) / m) * cell_value(g, k, j + 1) / n;
  }
  return v;
}

Integrals integrate_objective(const PriceGrid& g, const std::vector<int>& a,
                              const std::vector<int>& b, int samples) {
  const int m = g.dims().m();
  const int n = g.dims().n();
  const int s = samples;
  auto index = [](double t, int k) {
    return std::min(k, static_cast<int>(std::floor(t * k + 1e-9)));
  };
  auto f = [&](double x, double y) { return g(index(x, m), index(y, n)); };
  auto path = [&](const std::vector<int>& p, double x) {
    return static_cast<double>(p[static_cast<std::size_t>(index(x, m))]) / n;
  };
  // sup{x : beta(x) <= y} over the step path b.
  auto beta_inv = [&](double y) {
    for (int i = 0; i <= m; ++i) {
      if (static_cast<double>(b[static_cast<std::size_t>(i)]) / n > y) {
        return static_cast<double>(i) / m;
      }
    }
    return 1.0;
  };

  Integrals out;
  const double dx = 1.0 / (m * s);
  const double dy = 1.0 / (n * s);
  for (int xs = 0; xs < m * s; ++xs) {
    const double x = (xs + 0.5) * dx;
    const double al = path(a, x);
    const double be = path(b, x);
    out.match += (al - be) * dx;
    out.u_gain += (1.0 - al + be) * (1.0 - f(x, al)) * dx;
    for (int ys = 0; ys < n * s; ++ys) {
      const double y = (ys + 0.5) * dy;
      if (y > al) out.v_late += f(beta_inv(y), y) * dx * dy;
    }
  }
  for (int ys = 0; ys < n * s; ++ys) {
    const double y = (ys + 0.5) * dy;
    const double bi = beta_inv(y);
    out.v_early += (1.0 - bi) * f(bi, y) * dy;
  }
  return out;
}

}  // namespace rankinglp::oracle
