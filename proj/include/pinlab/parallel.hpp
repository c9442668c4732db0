// Copyright 2026 The pinlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/// @file parallel.hpp
/// @brief Deterministic block-parallel map used by the enumerations.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace pinlab {

/// Worker count: PINLAB_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("PINLAB_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Computes fn(0..blocks-1) on up to worker_count() threads and returns the
/// results in block order, so the reduction never depends on scheduling.
/// The first exception thrown by any block is rethrown.
template <class Fn>
auto parallel_blocks(int blocks, Fn&& fn)
    -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  std::vector<R> out(static_cast<std::size_t>(std::max(blocks, 0)));
  const unsigned workers =
      std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(blocks, 1)));
  if (workers <= 1) {
    for (int b = 0; b < blocks; ++b) out[static_cast<std::size_t>(b)] = fn(b);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int b = next++; b < blocks; b = next++)
          out[static_cast<std::size_t>(b)] = fn(b);
      } catch (...) {
        errors[w] = std::current_exception();
        next = blocks;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace pinlab
