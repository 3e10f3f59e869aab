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

#include "rankinglp/constraint_set.hpp"

#include <algorithm>
#include <iterator>

namespace rankinglp {

namespace {

template <typename T>
std::size_t merge_sorted_unique(std::vector<T>& target, std::vector<T> extra) {
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  std::vector<T> merged;
  merged.reserve(target.size() + extra.size());
  std::set_union(std::make_move_iterator(target.begin()),
                 std::make_move_iterator(target.end()),
                 std::make_move_iterator(extra.begin()),
                 std::make_move_iterator(extra.end()),
                 std::back_inserter(merged));
  const std::size_t added = merged.size() - target.size();
  target = std::move(merged);
  return added;
}

template <typename T>
void require_grid(const std::vector<T>& items, const GridDims& dims) {
  for (const T& item : items) {
    if (item.dims() != dims) {
      throw InvalidArgument("constraint set member " + item.to_string() +
                            " is not on grid " + dims.to_string());
    }
  }
}

}  // namespace

ConstraintSet ConstraintSet::of_paths(GridDims dims,
                                      std::vector<MonotonePath> paths) {
  ConstraintSet set(Family::kLower, dims);
  set.insert(std::move(paths));
  return set;
}

ConstraintSet ConstraintSet::of_pairs(GridDims dims,
                                      std::vector<PathPair> pairs) {
  ConstraintSet set(Family::kUpper, dims);
  set.insert(std::move(pairs));
  return set;
}

ConstraintSet ConstraintSet::all_paths(GridDims dims) {
  return of_paths(dims, enumerate_paths(dims));
}

ConstraintSet ConstraintSet::all_pairs(GridDims dims) {
  return of_pairs(dims, enumerate_dominant_pairs(dims));
}

const std::vector<MonotonePath>& ConstraintSet::paths() const {
  if (family_ != Family::kLower) {
    throw InvalidArgument("upper constraint set holds pairs, not paths");
  }
  return paths_;
}

const std::vector<PathPair>& ConstraintSet::pairs() const {
  if (family_ != Family::kUpper) {
    throw InvalidArgument("lower constraint set holds paths, not pairs");
  }
  return pairs_;
}

std::size_t ConstraintSet::insert(std::vector<MonotonePath> paths) {
  if (family_ != Family::kLower) {
    throw InvalidArgument("cannot insert paths into an upper constraint set");
  }
  require_grid(paths, dims_);
  return merge_sorted_unique(paths_, std::move(paths));
}

std::size_t ConstraintSet::insert(std::vector<PathPair> pairs) {
  if (family_ != Family::kUpper) {
    throw InvalidArgument("cannot insert pairs into a lower constraint set");
  }
  require_grid(pairs, dims_);
  return merge_sorted_unique(pairs_, std::move(pairs));
}

bool ConstraintSet::contains(const MonotonePath& path) const {
  return std::binary_search(paths_.begin(), paths_.end(), path);
}

bool ConstraintSet::contains(const PathPair& pair) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), pair);
}

}  // namespace rankinglp
