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


/// @file brute_force.hpp
/// @brief Exhaustive decomposition oracle: two distinct simple point
/// subsets of size >= k sharing at most a given number of entries.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/permutation.hpp"

namespace pinlab {

inline constexpr int kMaxBruteForceLength = 12;
inline constexpr int kMaxSubsetScanLength = 20;

struct SubsetPair {
  PointSubset a;
  PointSubset b;
  [[nodiscard]] int overlap() const { return a.overlap(b); }
};

namespace detail {

inline std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) idx.push_back(i + 1);
  return idx;
}

inline bool mask_is_simple(const Permutation& pi, std::uint32_t mask) {
  std::vector<int> vals;
  for (int i : mask_indices(mask)) vals.push_back(pi(i));
  return is_simple(pattern_of(vals));
}

/// Simple masks with popcount in [lo, hi], ordered by their sorted index
/// lists.
inline std::vector<std::uint32_t> simple_masks(const Permutation& pi, int lo,
                                               int hi) {
  const int n = pi.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const int c = std::popcount(m);
    if (c >= lo && c <= hi && mask_is_simple(pi, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t x, std::uint32_t y) {
    return mask_indices(x) < mask_indices(y);
  });
  return out;
}

inline std::optional<std::pair<std::uint32_t, std::uint32_t>> pair_search(
    const std::vector<std::uint32_t>& masks, int max_overlap) {
  for (int o = 0; o <= max_overlap; ++o)
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if (std::popcount(masks[i] & masks[j]) == o)
          return std::pair{masks[i], masks[j]};
  return std::nullopt;
}

}  // namespace detail

/// Two distinct simple subsets of pi, each of size >= k, sharing at most
/// max_overlap points. The witness is the lexicographically least disjoint
/// pair of sizes k..k+1 if one exists (a cheap first pass); otherwise the
/// full search over all sizes returns the least-overlap pair, ties broken
/// lexicographically by index lists. Existence never depends on the first
/// pass.
inline std::optional<SubsetPair> brute_force_decompose(const Permutation& pi,
                                                       int k,
                                                       int max_overlap = 2) {
  const int n = pi.size();
  detail::require(n <= kMaxBruteForceLength,
                  "host too large for exhaustive search (n <= 12)");
  detail::require(k >= 1, "k must be at least 1");
  detail::require(max_overlap >= 0, "overlap cap must be nonnegative");
  if (k > n) return std::nullopt;

  auto to_pair = [&](std::pair<std::uint32_t, std::uint32_t> p) {
    return SubsetPair{PointSubset::from_indices(pi, detail::mask_indices(p.first)),
                      PointSubset::from_indices(pi, detail::mask_indices(p.second))};
  };
  auto quick = detail::pair_search(detail::simple_masks(pi, k, k + 1), 0);
  if (quick) return to_pair(*quick);
  auto full = detail::pair_search(detail::simple_masks(pi, k, n), max_overlap);
  if (full) return to_pair(*full);
  return std::nullopt;
}

/// Does every simple subset of size >= min_size contain all of `required`
/// (1-based indices)?
inline bool every_simple_subset_contains(const Permutation& pi, int min_size,
                                         const std::vector<int>& required) {
  const int n = pi.size();
  detail::require(n <= kMaxSubsetScanLength,
                  "host too large for exhaustive subset scan (n <= 20)");
  std::uint32_t need = 0;
  for (int i : required) need |= 1u << (i - 1);
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (std::popcount(m) < min_size || (m & need) == need) continue;
    if (detail::mask_is_simple(pi, m)) return false;
  }
  return true;
}

}  // namespace pinlab
