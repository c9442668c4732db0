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

/// @file intervals.hpp
/// @brief Intervals (blocks) of a permutation and the simplicity test.
///
/// An interval is a span of contiguous indices [a, b] whose values form a
/// contiguous range. Every span is scanned once per start index with a
/// running min/max, so detection is O(n^2).

#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

#include "pinlab/permutation.hpp"

namespace pinlab {

struct IntervalSpan {
  int a = 0;
  int b = 0;

  [[nodiscard]] int length() const { return b - a + 1; }

  friend constexpr bool operator==(const IntervalSpan&,
                                   const IntervalSpan&) = default;
  friend constexpr auto operator<=>(const IntervalSpan&,
                                    const IntervalSpan&) = default;
};

/// All intervals with 2 <= length <= n-1, sorted by (a, b). `values` must
/// be a permutation of 1..n.
inline std::vector<IntervalSpan> intervals_of(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<IntervalSpan> out;
  for (int a = 0; a < n; ++a) {
    int lo = values[static_cast<std::size_t>(a)];
    int hi = lo;
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, values[static_cast<std::size_t>(b)]);
      hi = std::max(hi, values[static_cast<std::size_t>(b)]);
      if (b - a + 1 == n) break;
      if (hi - lo == b - a) out.push_back({a + 1, b + 1});
    }
  }
  return out;
}

inline std::vector<IntervalSpan> intervals_of(const Permutation& pi) {
  return intervals_of(pi.values());
}

/// True iff the only intervals have size 0, 1 or n. Lengths 1 and 2 are
/// simple; the empty permutation is not. `values` must be a permutation of
/// 1..n; reduce other sequences with pattern_of first.
inline bool is_simple(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return false;
  for (int a = 0; a < n; ++a) {
    int lo = values[static_cast<std::size_t>(a)];
    int hi = lo;
    const int last = (a == 0) ? n - 2 : n - 1;
    for (int b = a + 1; b <= last; ++b) {
      lo = std::min(lo, values[static_cast<std::size_t>(b)]);
      hi = std::max(hi, values[static_cast<std::size_t>(b)]);
      if (hi - lo == b - a) return false;
    }
  }
  return true;
}

inline bool is_simple(const Permutation& pi) { return is_simple(pi.values()); }

/// Simplicity of the pattern of a point subset.
inline bool is_simple(const PointSubset& sub) {
  return is_simple(sub.pattern());
}

/// Simplicity of the pattern formed by a set of points (any order).
inline bool is_simple_points(std::span<const Point> pts) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> vals;
  vals.reserve(sorted.size());
  for (const auto& p : sorted) vals.push_back(p.value);
  return is_simple(pattern_of(vals));
}

}  // namespace pinlab
