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

// Monotone grid paths on the m x n grid.
//
// A path is the vector b = (b_0, ..., b_m) with 0 <= b_0 <= ... <= b_m = n.
// It encodes the step function theta(x) = b_{floor(m x)} / n. Paths are
// ordered lexicographically on b, which is also the enumeration order.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankinglp {

class GridDims {
 public:
  GridDims(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  GridDims doubled() const { return {2 * m_, 2 * n_}; }
  std::string to_string() const;

  friend bool operator==(const GridDims&, const GridDims&) = default;
  friend auto operator<=>(const GridDims&, const GridDims&) = default;

 private:
  int m_;
  int n_;
};

class InversePath {
 public:
  explicit InversePath(std::vector<int> values) : jb_(std::move(values)) {}

  // Smallest stage i with b_i > j, for j in [0, n).
  int operator[](int j) const { return jb_[static_cast<std::size_t>(j)]; }
  std::span<const int> values() const { return jb_; }
  int size() const { return static_cast<int>(jb_.size()); }

  friend bool operator==(const InversePath&, const InversePath&) = default;

 private:
  std::vector<int> jb_;
};

class MonotonePath {
 public:
  // Validates monotonicity, range, and b_m = n.
  MonotonePath(GridDims dims, std::vector<int> b);

  // (n, ..., n): the path that sits on the top edge of the grid.
  static MonotonePath top(GridDims dims);
  // (0, ..., 0, n): the path that sits on the bottom edge until the last stage.
  static MonotonePath bottom(GridDims dims);

  // Parses "b0,b1,...,bm". The grid is implied: m = size - 1, n = b_m.
  static MonotonePath parse(std::string_view text);
  // As parse(), but requires the result to live on `dims`.
  static MonotonePath parse(std::string_view text, GridDims dims);

  const GridDims& dims() const { return dims_; }
  std::span<const int> values() const { return b_; }
  int operator[](int i) const { return b_[static_cast<std::size_t>(i)]; }
  std::string to_string() const;

  // Area under the step path in grid cells: sum_{i<m} b_i.
  int area() const;

  friend bool operator==(const MonotonePath& x, const MonotonePath& y) {
    return x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const MonotonePath& x,
                                          const MonotonePath& y) {
    return x.b_ <=> y.b_;
  }

 private:
  struct Unchecked {};
  MonotonePath(Unchecked, GridDims dims, std::vector<int> b)
      : dims_(dims), b_(std::move(b)) {}

  friend class PathEnumerator;
  friend MonotonePath unrank_path(GridDims dims, std::uint64_t index);
  friend MonotonePath upscale(const MonotonePath& path);

  GridDims dims_;
  std::vector<int> b_;
};

// A dominant pair: a_i >= b_i for every stage.
class PathPair {
 public:
  PathPair(MonotonePath a, MonotonePath b);

  // Parses "a|b".
  static PathPair parse(std::string_view text);

  const MonotonePath& a() const { return a_; }
  const MonotonePath& b() const { return b_; }
  const GridDims& dims() const { return a_.dims(); }
  std::string to_string() const;

  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend std::strong_ordering operator<=>(const PathPair& x,
                                          const PathPair& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  MonotonePath a_;
  MonotonePath b_;
};

// binomial(m + n, m), the number of monotone paths. Throws on overflow.
std::uint64_t path_count(GridDims dims);
// binomial(n, k) with overflow detection.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// Number of dominant pairs (a, b), a_i >= b_i. Returned as a double because
// it overflows 64 bits quickly; exact whenever it is below 2^53.
double dominant_pair_count(GridDims dims);

// Streams every path once, in lexicographic order of b.
class PathEnumerator {
 public:
  explicit PathEnumerator(GridDims dims);
  // Starts the stream at the path with the given lexicographic index.
  PathEnumerator(GridDims dims, std::uint64_t start_index);

  // Current path; only valid while !done().
  const MonotonePath& current() const { return current_; }
  bool done() const { return done_; }
  void advance();

 private:
  MonotonePath current_;
  bool done_ = false;
};

std::vector<MonotonePath> enumerate_paths(GridDims dims);
void for_each_path(GridDims dims,
                   const std::function<void(const MonotonePath&)>& visit);
// Visits every dominant pair, ordered by b first and then by a.
void for_each_dominant_pair(
    GridDims dims, const std::function<void(const PathPair&)>& visit);
std::vector<PathPair> enumerate_dominant_pairs(GridDims dims);

// Combinatorial ranking: position of the path in the lexicographic stream.
std::uint64_t rank_path(const MonotonePath& path);
MonotonePath unrank_path(GridDims dims, std::uint64_t index);

InversePath inverse(const MonotonePath& path);
// Rebuilds b from its inverse: b_i = min{j : jb_j > i}, or n if none.
MonotonePath from_inverse(GridDims dims, const InversePath& inv);

// Paths reachable by moving one coordinate b_i (i < m) by +-1. Each move adds
// or removes exactly one unit square under the step path. Sorted.
std::vector<MonotonePath> neighbors(const MonotonePath& path);

// Local perturbations of a pair: move one coordinate of one side, keep only
// dominant results. Sorted.
std::vector<PathPair> perturb_pairs(const PathPair& pair);

// The same step function on the (2m, 2n) grid.
MonotonePath upscale(const MonotonePath& path);
PathPair upscale(const PathPair& pair);

// Resamples a path onto an arbitrary grid: b'_k = round(n' b_{floor(k m / m')}
// / n) for k < m'. Monotone and dominance preserving; equals upscale() when
// the target is the doubled grid.
MonotonePath regrid(const MonotonePath& path, GridDims target);
PathPair regrid(const PathPair& pair, GridDims target);

// theta(x) for the step function encoded by the path.
double step_value(const MonotonePath& path, double x);

}  // namespace rankinglp
