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


/// @file enumerate.hpp
/// @brief Exhaustive enumeration of S_n and of its simple members, with a
/// second, definition-literal simplicity checker for cross-checking.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/parallel.hpp"
#include "pinlab/permutation.hpp"

namespace pinlab {

inline constexpr int kMaxEnumerateLength = 11;
inline constexpr int kMaxCountLength = 12;

/// Simplicity straight from the definition: no block of 2..n-1 contiguous
/// positions whose value set, sorted, is a run of consecutive integers.
inline bool is_simple_literal(const Permutation& pi) {
  const int n = pi.size();
  if (n == 0) return false;
  for (int len = 2; len <= n - 1; ++len) {
    for (int a = 1; a + len - 1 <= n; ++a) {
      std::set<int> vals;
      for (int i = a; i < a + len; ++i) vals.insert(pi(i));
      if (*vals.rbegin() - *vals.begin() == len - 1) return false;
    }
  }
  return true;
}

/// Calls visit(values) for every permutation of [n] in lexicographic order.
template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(std::as_const(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

namespace detail {

/// Depth-first extension of a prefix whose first entry is fixed. A prefix
/// is abandoned as soon as its new last entry closes a block of contiguous
/// values of length 2..n-1: positions and values already present stay an
/// interval in every completion.
template <class Visit>
void simple_with_first(int n, int first, Visit&& visit) {
  std::vector<int> v{first};
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  used[static_cast<std::size_t>(first)] = 1;
  std::function<void()> rec = [&] {
    const int j = static_cast<int>(v.size());
    if (j == n) {
      visit(std::as_const(v));
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      int lo = x, hi = x;
      bool closes = false;
      for (int a = j - 1; a >= 0 && !closes; --a) {
        lo = std::min(lo, v[static_cast<std::size_t>(a)]);
        hi = std::max(hi, v[static_cast<std::size_t>(a)]);
        const int len = j - a + 1;
        closes = hi - lo == len - 1 && len < n;
      }
      if (closes) continue;
      used[static_cast<std::size_t>(x)] = 1;
      v.push_back(x);
      rec();
      v.pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec();
}

inline void check_enumerate_range(int n, int cap) {
  detail::require(n >= 1 && n <= cap,
                  "n must be in 1.." + std::to_string(cap));
}

}  // namespace detail

/// Calls visit(values) for every simple permutation of length n in
/// lexicographic order (single-threaded).
template <class Visit>
void for_each_simple_permutation(int n, Visit&& visit) {
  detail::check_enumerate_range(n, kMaxCountLength);
  for (int f = 1; f <= n; ++f) detail::simple_with_first(n, f, visit);
}

/// All simple permutations of length n in lexicographic order. Blocks by
/// first entry run in parallel and are concatenated in order.
inline std::vector<Permutation> enumerate_simple_permutations(int n) {
  detail::check_enumerate_range(n, kMaxEnumerateLength);
  auto blocks = parallel_blocks(n, [n](int b) {
    std::vector<Permutation> out;
    detail::simple_with_first(n, b + 1, [&](const std::vector<int>& v) {
      out.emplace_back(v);
    });
    return out;
  });
  std::vector<Permutation> all;
  for (auto& blk : blocks)
    for (auto& p : blk) all.push_back(std::move(p));
  return all;
}

inline std::uint64_t count_simple_permutations(int n) {
  detail::check_enumerate_range(n, kMaxCountLength);
  auto blocks = parallel_blocks(n, [n](int b) {
    std::uint64_t c = 0;
    detail::simple_with_first(n, b + 1, [&](const std::vector<int>&) { ++c; });
    return c;
  });
  return std::accumulate(blocks.begin(), blocks.end(), std::uint64_t{0});
}

}  // namespace pinlab
