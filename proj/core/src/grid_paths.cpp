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

#include "rankinglp/grid_paths.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "rankinglp/errors.hpp"

namespace rankinglp {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw InvalidArgument("malformed path '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GridDims::GridDims(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw InvalidArgument("grid dims must be positive, got " + to_string());
  }
}

std::string GridDims::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

MonotonePath::MonotonePath(GridDims dims, std::vector<int> b)
    : dims_(dims), b_(std::move(b)) {
  const int m = dims.m();
  const int n = dims.n();
  if (static_cast<int>(b_.size()) != m + 1) {
    throw InvalidArgument("path " + to_string() + " needs " +
                          std::to_string(m + 1) + " entries");
  }
  for (int i = 0; i <= m; ++i) {
    if (b_[i] < 0 || b_[i] > n) {
      throw InvalidArgument("path " + to_string() + " leaves [0, n]");
    }
    if (i > 0 && b_[i] < b_[i - 1]) {
      throw InvalidArgument("path " + to_string() + " is not monotone");
    }
  }
  if (b_[m] != n) {
    throw InvalidArgument("path " + to_string() + " must end at b_m = n");
  }
}

MonotonePath MonotonePath::top(GridDims dims) {
  return MonotonePath(Unchecked{}, dims,
                      std::vector<int>(dims.m() + 1, dims.n()));
}

MonotonePath MonotonePath::bottom(GridDims dims) {
  std::vector<int> b(dims.m() + 1, 0);
  b.back() = dims.n();
  return MonotonePath(Unchecked{}, dims, std::move(b));
}

MonotonePath MonotonePath::parse(std::string_view text) {
  std::vector<int> b = parse_int_list(text);
  if (b.size() < 2) {
    throw InvalidArgument("path '" + std::string(text) +
                          "' needs at least two entries");
  }
  GridDims dims(static_cast<int>(b.size()) - 1, b.back());
  return MonotonePath(dims, std::move(b));
}

MonotonePath MonotonePath::parse(std::string_view text, GridDims dims) {
  MonotonePath path = parse(text);
  if (path.dims() != dims) {
    throw InvalidArgument("path '" + std::string(text) + "' is not on grid " +
                          dims.to_string());
  }
  return path;
}

std::string MonotonePath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(b_[i]);
  }
  return out;
}

int MonotonePath::area() const {
  int total = 0;
  for (int i = 0; i < dims_.m(); ++i) total += b_[i];
  return total;
}

PathPair::PathPair(MonotonePath a, MonotonePath b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dims() != b_.dims()) {
    throw InvalidArgument("pair " + to_string() + " mixes grids");
  }
  for (int i = 0; i <= a_.dims().m(); ++i) {
    if (a_[i] < b_[i]) {
      throw InvalidArgument("pair " + to_string() + " violates a_i >= b_i");
    }
  }
}

PathPair PathPair::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw InvalidArgument("pair '" + std::string(text) + "' lacks '|'");
  }
  return PathPair(MonotonePath::parse(text.substr(0, bar)),
                  MonotonePath::parse(text.substr(bar + 1)));
}

std::string PathPair::to_string() const {
  return a_.to_string() + "|" + b_.to_string();
}

__extension__ using Wide = unsigned __int128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is an integer at every step.
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument("binomial(" + std::to_string(n) + "," +
                            std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t path_count(GridDims dims) {
  return binomial(static_cast<std::uint64_t>(dims.m() + dims.n()),
                  static_cast<std::uint64_t>(dims.m()));
}

double dominant_pair_count(GridDims dims) {
  const int n = dims.n();
  // ways[a][b]: prefixes ending at stage i with (a_i, b_i) = (a, b).
  std::vector<std::vector<double>> ways(n + 1, std::vector<double>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= a; ++b) ways[a][b] = 1;
  }
  for (int i = 1; i < dims.m(); ++i) {
    // 2D prefix sums over (a' <= a, b' <= b).
    std::vector<std::vector<double>> prefix(n + 1,
                                            std::vector<double>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        double v = ways[a][b];
        if (a > 0) v += prefix[a - 1][b];
        if (b > 0) v += prefix[a][b - 1];
        if (a > 0 && b > 0) v -= prefix[a - 1][b - 1];
        prefix[a][b] = v;
      }
    }
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) ways[a][b] = b <= a ? prefix[a][b] : 0;
    }
  }
  double total = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= a; ++b) total += ways[a][b];
  }
  return total;
}

PathEnumerator::PathEnumerator(GridDims dims)
    : current_(MonotonePath::bottom(dims)) {}

PathEnumerator::PathEnumerator(GridDims dims, std::uint64_t start_index)
    : current_(MonotonePath::bottom(dims)) {
  if (start_index >= path_count(dims)) {
    done_ = true;
  } else {
    current_ = unrank_path(dims, start_index);
  }
}

void PathEnumerator::advance() {
  if (done_) return;
  std::vector<int>& b = current_.b_;
  const int m = current_.dims().m();
  const int n = current_.dims().n();
  int i = m - 1;
  while (i >= 0 && b[i] == n) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++b[i];
  for (int k = i + 1; k < m; ++k) b[k] = b[i];
}

std::vector<MonotonePath> enumerate_paths(GridDims dims) {
  std::vector<MonotonePath> out;
  out.reserve(path_count(dims));
  for (PathEnumerator it(dims); !it.done(); it.advance()) {
    out.push_back(it.current());
  }
  return out;
}

void for_each_path(GridDims dims,
                   const std::function<void(const MonotonePath&)>& visit) {
  for (PathEnumerator it(dims); !it.done(); it.advance()) visit(it.current());
}

namespace {

void extend_dominating(const MonotonePath& b, std::vector<int>& a, int stage,
                       const std::function<void(const PathPair&)>& visit) {
  const int m = b.dims().m();
  const int n = b.dims().n();
  if (stage == m) {
    a[m] = n;
    visit(PathPair(MonotonePath(b.dims(), a), b));
    return;
  }
  const int low = std::max(stage > 0 ? a[stage - 1] : 0, b[stage]);
  for (int v = low; v <= n; ++v) {
    a[stage] = v;
    extend_dominating(b, a, stage + 1, visit);
  }
}

}  // namespace

void for_each_dominant_pair(
    GridDims dims, const std::function<void(const PathPair&)>& visit) {
  std::vector<int> a(dims.m() + 1, 0);
  for (PathEnumerator it(dims); !it.done(); it.advance()) {
    extend_dominating(it.current(), a, 0, visit);
  }
}

std::vector<PathPair> enumerate_dominant_pairs(GridDims dims) {
  std::vector<PathPair> out;
  for_each_dominant_pair(dims,
                         [&](const PathPair& pair) { out.push_back(pair); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Number of non-decreasing sequences of `length` values in [low, n].
std::uint64_t tail_count(int length, int low, int n) {
  return binomial(static_cast<std::uint64_t>(length + n - low),
                  static_cast<std::uint64_t>(length));
}

}  // namespace

std::uint64_t rank_path(const MonotonePath& path) {
  const int m = path.dims().m();
  const int n = path.dims().n();
  std::uint64_t index = 0;
  int low = 0;
  for (int i = 0; i < m; ++i) {
    for (int v = low; v < path[i]; ++v) index += tail_count(m - i - 1, v, n);
    low = path[i];
  }
  return index;
}

MonotonePath unrank_path(GridDims dims, std::uint64_t index) {
  const int m = dims.m();
  const int n = dims.n();
  if (index >= path_count(dims)) {
    throw InvalidArgument("path index " + std::to_string(index) +
                          " out of range for grid " + dims.to_string());
  }
  std::vector<int> b(m + 1, n);
  int low = 0;
  for (int i = 0; i < m; ++i) {
    int v = low;
    for (;; ++v) {
      const std::uint64_t block = tail_count(m - i - 1, v, n);
      if (index < block) break;
      index -= block;
    }
    b[i] = v;
    low = v;
  }
  return MonotonePath(MonotonePath::Unchecked{}, dims, std::move(b));
}

InversePath inverse(const MonotonePath& path) {
  const int n = path.dims().n();
  std::vector<int> jb(n);
  int i = 0;
  for (int j = 0; j < n; ++j) {
    while (path[i] <= j) ++i;  // terminates: b_m = n > j
    jb[j] = i;
  }
  return InversePath(std::move(jb));
}

MonotonePath from_inverse(GridDims dims, const InversePath& inv) {
  if (inv.size() != dims.n()) {
    throw InvalidArgument("inverse vector length does not match grid " +
                          dims.to_string());
  }
  std::vector<int> b(dims.m() + 1, dims.n());
  for (int i = 0; i < dims.m(); ++i) {
    for (int j = 0; j < dims.n(); ++j) {
      if (inv[j] > i) {
        b[i] = j;
        break;
      }
    }
  }
  return MonotonePath(dims, std::move(b));
}

std::vector<MonotonePath> neighbors(const MonotonePath& path) {
  const int m = path.dims().m();
  const int n = path.dims().n();
  std::vector<MonotonePath> out;
  std::vector<int> b(path.values().begin(), path.values().end());
  for (int i = 0; i < m; ++i) {
    for (int delta : {-1, +1}) {
      const int v = b[i] + delta;
      if (v < 0 || v > n) continue;
      if (i > 0 && v < b[i - 1]) continue;
      if (v > b[i + 1]) continue;
      const int saved = b[i];
      b[i] = v;
      out.emplace_back(path.dims(), b);
      b[i] = saved;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathPair> perturb_pairs(const PathPair& pair) {
  std::vector<PathPair> out;
  const int m = pair.dims().m();
  auto dominates = [m](const MonotonePath& a, const MonotonePath& b) {
    for (int i = 0; i < m; ++i) {
      if (a[i] < b[i]) return false;
    }
    return true;
  };
  for (MonotonePath& a : neighbors(pair.a())) {
    if (dominates(a, pair.b())) out.emplace_back(std::move(a), pair.b());
  }
  for (MonotonePath& b : neighbors(pair.b())) {
    if (dominates(pair.a(), b)) out.emplace_back(pair.a(), std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonotonePath upscale(const MonotonePath& path) {
  const GridDims target = path.dims().doubled();
  std::vector<int> b(target.m() + 1);
  for (int i = 0; i < target.m(); ++i) b[i] = 2 * path[i / 2];
  b[target.m()] = target.n();
  return MonotonePath(MonotonePath::Unchecked{}, target, std::move(b));
}

PathPair upscale(const PathPair& pair) {
  return PathPair(upscale(pair.a()), upscale(pair.b()));
}

MonotonePath regrid(const MonotonePath& path, GridDims target) {
  const int m = path.dims().m();
  const int n = path.dims().n();
  std::vector<int> b(target.m() + 1);
  for (int k = 0; k < target.m(); ++k) {
    const long long stage =
        static_cast<long long>(k) * m / target.m();  // floor(k m / m')
    const long long scaled = 2LL * target.n() * path[static_cast<int>(stage)];
    b[k] = static_cast<int>((scaled + n) / (2LL * n));  // round half up
  }
  b[target.m()] = target.n();
  return MonotonePath(target, std::move(b));
}

PathPair regrid(const PathPair& pair, GridDims target) {
  return PathPair(regrid(pair.a(), target), regrid(pair.b(), target));
}

double step_value(const MonotonePath& path, double x) {
  const int m = path.dims().m();
  int stage = static_cast<int>(std::floor(x * m));
  stage = std::clamp(stage, 0, m);
  return static_cast<double>(path[stage]) / path.dims().n();
}

}  // namespace rankinglp
