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


// Independent brute-force reference implementations. They share nothing
// with the library beyond the Permutation container and are written for
// obviousness, not speed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pinlab/permutation.hpp"

namespace oracle {

using pinlab::Permutation;

/// Rank of each entry among the entries: pattern by counting smaller ones.
inline std::vector<int> pattern(const std::vector<int>& seq) {
  std::vector<int> out;
  for (int v : seq) {
    int smaller = 0;
    for (int w : seq) smaller += w < v;
    out.push_back(smaller + 1);
  }
  return out;
}

inline std::vector<int> values(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

/// Index sets (1-based, ascending) of all copies of sigma in pi, by
/// trying every subset of positions.
inline std::vector<std::vector<int>> copies(const Permutation& sigma,
                                            const Permutation& pi) {
  const int n = pi.size(), k = sigma.size();
  std::vector<std::vector<int>> out;
  const std::vector<int> target = values(sigma);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) != k) continue;
    std::vector<int> idx, sub;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) {
        idx.push_back(i + 1);
        sub.push_back(pi(i + 1));
      }
    if (pattern(sub) == target) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Spans [a, b] with 2 <= b-a+1 <= n-1 whose value set is an integer range.
inline std::vector<std::pair<int, int>> intervals(const Permutation& pi) {
  const int n = pi.size();
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (b - a + 1 == n) continue;
      std::vector<int> v;
      for (int i = a; i <= b; ++i) v.push_back(pi(i));
      std::sort(v.begin(), v.end());
      bool run = true;
      for (std::size_t i = 1; i < v.size(); ++i) run = run && v[i] == v[i - 1] + 1;
      if (run) out.push_back({a, b});
    }
  return out;
}

inline bool simple(const Permutation& pi) {
  return pi.size() >= 1 && intervals(pi).empty();
}

inline bool simple(const std::vector<int>& seq) {
  return simple(Permutation(pattern(seq)));
}

/// Quadratic-time longest increasing subsequence length.
inline int lis(const std::vector<int>& s) {
  std::vector<int> best(s.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (s[j] < s[i]) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

inline int lds(std::vector<int> s) {
  for (int& v : s) v = -v;
  return lis(s);
}

inline bool monotone(const std::vector<int>& s, bool increasing) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (increasing ? s[i] < s[i - 1] : s[i] > s[i - 1]) return false;
  return true;
}

/// Horizontal alternation by definition: all odd values left of all even
/// values, or all even values left of all odd values.
inline bool horizontal_alternation(const Permutation& pi) {
  const int n = pi.size();
  int last_odd = 0, first_odd = n + 1, last_even = 0, first_even = n + 1;
  for (int i = 1; i <= n; ++i) {
    if (pi(i) % 2) {
      last_odd = std::max(last_odd, i);
      first_odd = std::min(first_odd, i);
    } else {
      last_even = std::max(last_even, i);
      first_even = std::min(first_even, i);
    }
  }
  return last_odd < first_even || last_even < first_odd;
}

inline bool vertical_alternation(const Permutation& pi) {
  return horizontal_alternation(pi.inverse());
}

enum class Shape { none, parallel, wedge };

/// Shape of a vertical alternation of length >= 4: the entries at odd and
/// at even positions each monotone, in the same (parallel) or opposite
/// (wedge) direction.
inline Shape vertical_shape(const Permutation& pi) {
  if (pi.size() < 4 || !vertical_alternation(pi)) return Shape::none;
  std::vector<int> odd, even;
  for (int i = 1; i <= pi.size(); ++i) (i % 2 ? odd : even).push_back(pi(i));
  const bool oi = monotone(odd, true), od = monotone(odd, false);
  const bool ei = monotone(even, true), ed = monotone(even, false);
  if ((oi && ei) || (od && ed)) return Shape::parallel;
  if ((oi && ed) || (od && ei)) return Shape::wedge;
  return Shape::none;
}

inline Shape shape(const Permutation& pi) {
  Shape s = vertical_shape(pi.inverse());
  if (s != Shape::none) return s;
  return vertical_shape(pi);
}

/// Longest subset of pi whose pattern has the given alternation shape
/// under the vertical or the horizontal reading.
inline int longest_alternation(const Permutation& pi, Shape want) {
  const int n = pi.size();
  int best = 0;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const int c = __builtin_popcount(m);
    if (c <= best || c < 4) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) sub.push_back(pi(i + 1));
    const Permutation p(pattern(sub));
    if (vertical_shape(p) == want || vertical_shape(p.inverse()) == want)
      best = c;
  }
  return best;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::vector<std::uint64_t> catalan(int upto) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(upto + 1), 0);
  c[0] = 1;
  for (int n = 1; n <= upto; ++n)
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(n)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
  return c;
}

/// Every permutation of length n, lexicographically.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Permutation> simple_permutations(int n) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n))
    if (simple(p)) out.push_back(p);
  return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace oracle
