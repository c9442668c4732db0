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

#pragma once

#include <algorithm>
#include <climits>
#include <span>
#include <vector>

namespace pinlab {

/// A monotone subsequence, as 0-based positions into the input.
struct MonotoneRun {
  std::vector<std::size_t> positions;
  [[nodiscard]] std::size_t size() const { return positions.size(); }
};

namespace detail {

/// Longest strictly increasing subsequence with the lexicographically least
/// position set. Patience sorting on the reversed sequence gives, for each
/// position, the length of the longest increasing run starting there; a
/// left-to-right greedy pass then picks the earliest feasible position.
inline MonotoneRun longest_increasing(std::span<const int> seq) {
  const std::size_t n = seq.size();
  std::vector<int> from(n, 0);
  std::vector<int> tails;  // tails of decreasing runs read right to left
  for (std::size_t r = n; r-- > 0;) {
    const int key = -seq[r];
    auto it = std::lower_bound(tails.begin(), tails.end(), key);
    from[r] = static_cast<int>(it - tails.begin()) + 1;
    if (it == tails.end()) tails.push_back(key);
    else *it = key;
  }
  MonotoneRun run;
  int need = static_cast<int>(tails.size());
  long long cur = LLONG_MIN;
  for (std::size_t i = 0; i < n && need > 0; ++i) {
    if (seq[i] > cur && from[i] >= need) {
      run.positions.push_back(i);
      cur = seq[i];
      --need;
    }
  }
  return run;
}

}  // namespace detail

struct MonotonePair {
  MonotoneRun increasing;
  MonotoneRun decreasing;

  [[nodiscard]] const MonotoneRun& longest() const {
    return increasing.size() >= decreasing.size() ? increasing : decreasing;
  }
};

/// Longest increasing and longest decreasing subsequences of distinct
/// values, O(n log n). Ties go to the lexicographically least position set.
inline MonotonePair monotone_extract(std::span<const int> seq) {
  std::vector<int> neg(seq.begin(), seq.end());
  for (int& v : neg) v = -v;
  return {detail::longest_increasing(seq), detail::longest_increasing(neg)};
}

}  // namespace pinlab
