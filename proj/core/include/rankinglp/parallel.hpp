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

#pragma once

#include <cstddef>
#include <functional>

namespace rankinglp {

// Worker count used when a caller passes 0: hardware concurrency, at least 1.
unsigned default_threads();

// Splits [0, count) into at most `threads` contiguous shards and runs
// body(shard, begin, end) on each, concurrently. Shard boundaries depend only
// on (count, threads), so callers that write per-shard results and merge them
// in shard order are deterministic. Exceptions from any shard are rethrown
// after all shards finish.
void parallel_shards(
    std::size_t count, unsigned threads,
    const std::function<void(unsigned shard, std::size_t begin,
                             std::size_t end)>& body);

}  // namespace rankinglp
