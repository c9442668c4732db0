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


/// @file classes.hpp
/// @brief Classes defined by pattern budgets (at most r_i copies of each
/// beta_i): membership, counting, and minimal non-members.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pinlab/containment.hpp"
#include "pinlab/enumerate.hpp"
#include "pinlab/error.hpp"
#include "pinlab/permutation.hpp"

namespace pinlab {

struct PatternLimit {
  Permutation pattern;
  int budget = 0;  // at most this many copies
};

using PatternBudget = std::vector<PatternLimit>;

inline constexpr int kMaxClassCountLength = 9;
inline constexpr int kMaxBasisLength = 8;

/// At most `budget` copies, stopping the count once it is exceeded.
inline bool within_limit(const Permutation& pi, const PatternLimit& lim) {
  if (lim.pattern == Permutation{1, 3, 2})
    return count_132(pi) <= static_cast<std::uint64_t>(lim.budget);
  int seen = 0;
  for_each_copy(lim.pattern, pi, [&](const std::vector<int>&) {
    return ++seen <= lim.budget;
  });
  return seen <= lim.budget;
}

inline bool in_class(const Permutation& pi, const PatternBudget& budget) {
  for (const auto& lim : budget)
    if (!within_limit(pi, lim)) return false;
  return true;
}

inline void check_budget(const PatternBudget& budget) {
  for (const auto& lim : budget) {
    detail::require(lim.budget >= 0, "budgets must be nonnegative");
    detail::require(lim.pattern.size() >= 1, "patterns must be nonempty");
  }
}

/// Number of permutations of length n in the class.
inline std::uint64_t count_class(const PatternBudget& budget, int n) {
  check_budget(budget);
  detail::require(n >= 0 && n <= kMaxClassCountLength, "n must be in 0..9");
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (in_class(Permutation(v), budget)) ++c;
  });
  return c;
}

/// Permutations outside the class all of whose one-point deletions are in
/// it (the basis, truncated at max_len), by length then lexicographically.
inline std::vector<Permutation> minimal_nonmembers(const PatternBudget& budget,
                                                   int max_len) {
  check_budget(budget);
  detail::require(max_len >= 1 && max_len <= kMaxBasisLength,
                  "max_len must be in 1..8");
  std::vector<Permutation> out;
  for (int n = 1; n <= max_len; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& v) {
      const Permutation pi(v);
      if (in_class(pi, budget)) return;
      for (int drop = 0; drop < n; ++drop) {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
          if (i != drop) rest.push_back(v[static_cast<std::size_t>(i)]);
        if (!in_class(pattern_of(rest), budget)) return;
      }
      out.push_back(pi);
    });
  }
  return out;
}

}  // namespace pinlab
