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

#include "rankinglp/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace rankinglp {

unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_shards(
    std::size_t count, unsigned threads,
    const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  if (threads == 0) threads = default_threads();
  const auto shards = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(threads, count)));
  if (shards == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) {
    const std::size_t begin = count * s / shards;
    const std::size_t end = count * (s + 1) / shards;
    workers.emplace_back([&, s, begin, end] {
      try {
        body(s, begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace rankinglp
