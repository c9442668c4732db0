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

/// @file containment.hpp
/// @brief Pattern containment: enumerate and count copies of sigma in pi.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "pinlab/permutation.hpp"

namespace pinlab {

/// Calls visit(indices) for every index set of pi whose pattern is sigma,
/// in lexicographic index order. visit returns false to stop early.
/// Prefixes whose partial pattern already disagrees with sigma are pruned.
template <class Visit>
void for_each_copy(const Permutation& sigma, const Permutation& pi,
                   Visit&& visit) {
  detail::require(sigma.size() >= 1, "pattern must be nonempty");
  const int k = sigma.size();
  const int n = pi.size();
  if (k > n) return;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  bool stop = false;

  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (stop) return;
    if (depth == k) {
      if (!visit(std::as_const(chosen))) stop = true;
      return;
    }
    const int s = sigma(depth + 1);
    for (int i = start; i <= n - (k - depth - 1) && !stop; ++i) {
      const int v = pi(i);
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const bool less_in_sigma = sigma(d + 1) < s;
        const bool less_in_pi = pi(chosen[static_cast<std::size_t>(d)]) < v;
        ok = less_in_sigma == less_in_pi;
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(depth)] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 1);
}

inline std::uint64_t count_copies(const Permutation& sigma,
                                  const Permutation& pi) {
  std::uint64_t count = 0;
  for_each_copy(sigma, pi, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

/// Witness index sets in lexicographic order, at most `limit` of them.
inline std::vector<std::vector<int>> copies(const Permutation& sigma,
                                            const Permutation& pi,
                                            std::size_t limit = SIZE_MAX) {
  std::vector<std::vector<int>> out;
  if (limit == 0) return out;
  for_each_copy(sigma, pi, [&](const std::vector<int>& idx) {
    out.push_back(idx);
    return out.size() < limit;
  });
  return out;
}

inline bool contains(const Permutation& pi, const Permutation& sigma) {
  bool found = false;
  for_each_copy(sigma, pi, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

/// O(n^2) count of copies of 132: sum over pairs j < k with pi(k) < pi(j) of
/// the number of i < j with pi(i) < pi(k).
inline std::uint64_t count_132(const Permutation& pi) {
  const int n = pi.size();
  // below[v] = #{i < j : pi(i) < v}, maintained as j advances.
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n + 2), 0);
  std::uint64_t total = 0;
  for (int j = 1; j <= n; ++j) {
    const int top = pi(j);
    for (int k = j + 1; k <= n; ++k)
      if (pi(k) < top) total += below[static_cast<std::size_t>(pi(k))];
    for (int v = top + 1; v <= n + 1; ++v) ++below[static_cast<std::size_t>(v)];
  }
  return total;
}

/// count_copies with the 132 fast path.
inline std::uint64_t count_copies_fast(const Permutation& sigma,
                                       const Permutation& pi) {
  if (sigma == Permutation{1, 3, 2}) return count_132(pi);
  return count_copies(sigma, pi);
}

}  // namespace pinlab
