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

/// @file alternations.hpp
/// @brief Horizontal and vertical alternations, their parallel / wedge
/// subclasses, extraction of long monotone sub-alternations and splitting
/// of parallel alternations.
///
/// A horizontal alternation has every odd value to the left of every even
/// value (or the reverse arrangement). A vertical alternation is the
/// inverse of one: the low half of the values sits at the odd positions, or
/// the high half does. Its two halves are the low and the high
/// subsequences; both monotone in the same sense is "parallel", in opposite
/// senses is "wedge".

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/monotone.hpp"
#include "pinlab/permutation.hpp"
#include "pinlab/symmetry.hpp"

namespace pinlab {

enum class Axis { horizontal, vertical };
enum class AlternationShape { parallel, wedge, neither };

/// Opening side of a wedge: '<' opens right, '>' opens left, 'v' opens up,
/// '^' opens down.
enum class WedgeOrientation { opens_right, opens_left, opens_up, opens_down };

inline char orientation_code(WedgeOrientation o) {
  switch (o) {
    case WedgeOrientation::opens_right: return '<';
    case WedgeOrientation::opens_left: return '>';
    case WedgeOrientation::opens_up: return 'v';
    case WedgeOrientation::opens_down: return '^';
  }
  return '?';
}

struct AlternationClass {
  Axis axis = Axis::vertical;
  AlternationShape shape = AlternationShape::neither;
  std::optional<WedgeOrientation> orientation;  // set iff shape == wedge
  bool reversed = false;

  [[nodiscard]] std::string describe() const {
    std::string out = axis == Axis::horizontal ? "horizontal" : "vertical";
    switch (shape) {
      case AlternationShape::parallel: out += " parallel"; break;
      case AlternationShape::wedge:
        out += " wedge ";
        out += orientation_code(*orientation);
        break;
      case AlternationShape::neither: out += " alternation"; break;
    }
    if (reversed) out += " (reversed)";
    return out;
  }

  friend bool operator==(const AlternationClass&,
                         const AlternationClass&) = default;
};

namespace detail {

inline bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
         v.end();
}
inline bool strictly_decreasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) ==
         v.end();
}

}  // namespace detail

/// Classification under the vertical reading only.
inline std::optional<AlternationClass> classify_vertical(
    const Permutation& pi) {
  const int n = pi.size();
  const int odd_count = (n + 1) / 2;
  bool low_at_odd = true;   // values 1..odd_count at odd positions
  bool high_at_odd = true;  // values n-odd_count+1..n at odd positions
  for (int i = 1; i <= n; i += 2) {
    if (pi(i) > odd_count) low_at_odd = false;
    if (pi(i) <= n - odd_count) high_at_odd = false;
  }
  if (!low_at_odd && !high_at_odd) return std::nullopt;

  AlternationClass c;
  c.axis = Axis::vertical;
  c.reversed = !low_at_odd;
  if (n < 4) return c;

  std::vector<int> odd, even;
  for (int i = 1; i <= n; ++i) (i % 2 ? odd : even).push_back(pi(i));
  const auto& low = c.reversed ? even : odd;
  const auto& high = c.reversed ? odd : even;
  const bool inc_low = detail::strictly_increasing(low);
  const bool dec_low = detail::strictly_decreasing(low);
  const bool inc_high = detail::strictly_increasing(high);
  const bool dec_high = detail::strictly_decreasing(high);
  if ((inc_low && inc_high) || (dec_low && dec_high)) {
    c.shape = AlternationShape::parallel;
  } else if (inc_high && dec_low) {
    c.shape = AlternationShape::wedge;
    c.orientation = WedgeOrientation::opens_right;
  } else if (dec_high && inc_low) {
    c.shape = AlternationShape::wedge;
    c.orientation = WedgeOrientation::opens_left;
  }
  return c;
}

/// Horizontal reading first, then vertical. Lengths <= 2 are always
/// alternations; the shape is only determined from length 4 on.
inline std::optional<AlternationClass> classify_alternation(
    const Permutation& pi) {
  if (auto h = classify_vertical(pi.inverse())) {
    h->axis = Axis::horizontal;
    if (h->orientation)
      h->orientation = *h->orientation == WedgeOrientation::opens_right
                           ? WedgeOrientation::opens_up
                           : WedgeOrientation::opens_down;
    return h;
  }
  return classify_vertical(pi);
}

inline std::optional<AlternationClass> classify_alternation(
    const PointSubset& sub) {
  return classify_alternation(sub.pattern());
}

namespace detail {

inline std::vector<Point> transpose_points(std::span<const Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({p.value, p.index});
  std::sort(out.begin(), out.end());
  return out;
}

/// Longest subsequence of `pi` whose indices alternate between values
/// <= threshold and values > threshold, with the low entries monotone in
/// direction low_dir and the high entries in high_dir (+1 increasing, -1
/// decreasing). O(n^3).
inline std::vector<int> longest_vertical_alternation(const Permutation& pi,
                                                      int threshold,
                                                      int low_dir,
                                                      int high_dir) {
  const int n = pi.size();
  auto is_low = [&](int i) { return pi(i) <= threshold; };
  auto ok = [&](int prev_same, int next) {
    if (prev_same == 0) return true;
    const int dir = is_low(next) ? low_dir : high_dir;
    return dir > 0 ? pi(prev_same) < pi(next) : pi(prev_same) > pi(next);
  };
  // best[a][b]: longest run ending at index a whose previous entry of the
  // other type is b (0: none).
  const std::size_t w = static_cast<std::size_t>(n + 1);
  std::vector<int> best(w * w, 0);
  std::vector<int> parent(w * w, -1);
  auto at = [&](int a, int b) -> std::size_t {
    return static_cast<std::size_t>(a) * w + static_cast<std::size_t>(b);
  };
  int best_len = 0;
  std::size_t best_state = 0;
  for (int a = 1; a <= n; ++a) {
    best[at(a, 0)] = 1;
    if (best_len < 1) {
      best_len = 1;
      best_state = at(a, 0);
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 0; b < a; ++b) {
      const int len = best[at(a, b)];
      if (len == 0) continue;
      for (int c = a + 1; c <= n; ++c) {
        if (is_low(c) == is_low(a) || !ok(b, c)) continue;
        if (best[at(c, a)] < len + 1) {
          best[at(c, a)] = len + 1;
          parent[at(c, a)] = static_cast<int>(at(a, b));
          if (len + 1 > best_len) {
            best_len = len + 1;
            best_state = at(c, a);
          }
        }
      }
    }
  }
  std::vector<int> idx;
  for (long s = static_cast<long>(best_state); s >= 0;
       s = parent[static_cast<std::size_t>(s)])
    idx.push_back(static_cast<int>(static_cast<std::size_t>(s) / w));
  std::reverse(idx.begin(), idx.end());
  return idx;
}

inline std::vector<int> longest_vertical_of_shape(const Permutation& pi,
                                                  AlternationShape shape) {
  std::vector<int> best;
  const std::pair<int, int> parallel_dirs[] = {{1, 1}, {-1, -1}};
  const std::pair<int, int> wedge_dirs[] = {{-1, 1}, {1, -1}};
  const auto& dirs =
      shape == AlternationShape::parallel ? parallel_dirs : wedge_dirs;
  for (int t = 1; t < pi.size(); ++t)
    for (auto [ld, hd] : dirs) {
      auto cand = longest_vertical_alternation(pi, t, ld, hd);
      if (cand.size() > best.size()) best = std::move(cand);
    }
  return best;
}

}  // namespace detail

/// Longest parallel (or wedge) alternation contained in the host, over both
/// axes. Exact: any vertical alternation splits at some value threshold into
/// its low and high halves, and for each threshold and pair of monotone
/// directions an O(n^3) dynamic program finds the longest one. Returns an
/// empty subset when nothing of length >= 4 exists.
inline PointSubset longest_alternation(const Permutation& host,
                                       AlternationShape shape) {
  detail::require(shape != AlternationShape::neither,
                  "shape must be parallel or wedge");
  auto vert = detail::longest_vertical_of_shape(host, shape);
  const Permutation inv = host.inverse();
  auto horiz = detail::longest_vertical_of_shape(inv, shape);
  std::vector<Point> pts;
  if (horiz.size() > vert.size()) {
    std::vector<Point> in_inverse;
    for (int i : horiz) in_inverse.push_back(inv.point(i));
    pts = detail::transpose_points(in_inverse);
  } else {
    for (int i : vert) pts.push_back(host.point(i));
  }
  if (pts.size() < 4) pts.clear();
  return PointSubset(host, std::move(pts));
}

/// From a vertical or horizontal alternation of length >= 2k^4, a parallel
/// or wedge sub-alternation of length >= 2k: a longest monotone run among
/// the odd-position entries, then a longest monotone run among their
/// partners at the following positions.
inline PointSubset parallel_or_wedge(const Permutation& alt, int k) {
  detail::require(k >= 2, "k must be at least 2");
  auto cls = classify_alternation(alt);
  detail::require(cls.has_value(), "input is not an alternation");
  const long long need = 2LL * k * k * k * k;
  detail::require(alt.size() >= need,
                  "alternation shorter than 2k^4 = " + std::to_string(need));

  const bool horizontal = cls->axis == Axis::horizontal &&
                          !classify_vertical(alt).has_value();
  const Permutation vert = horizontal ? alt.inverse() : alt;
  const int pairs = vert.size() / 2;

  std::vector<int> odd_vals;
  for (int j = 1; j <= pairs; ++j) odd_vals.push_back(vert(2 * j - 1));
  const MonotonePair first = monotone_extract(odd_vals);

  std::vector<int> best;
  for (const MonotoneRun* run : {&first.increasing, &first.decreasing}) {
    std::vector<int> partner_vals;
    for (std::size_t p : run->positions)
      partner_vals.push_back(vert(2 * static_cast<int>(p) + 2));
    const MonotonePair partners = monotone_extract(partner_vals);
    const MonotoneRun& second = partners.longest();
    std::vector<int> idx;
    for (std::size_t q : second.positions) {
      const int odd_index = 2 * static_cast<int>(run->positions[q]) + 1;
      idx.push_back(odd_index);
      idx.push_back(odd_index + 1);
    }
    if (idx.size() > best.size()) best = std::move(idx);
  }

  std::vector<Point> pts;
  for (int i : best) pts.push_back(vert.point(i));
  if (horizontal) pts = detail::transpose_points(pts);
  PointSubset out(alt, std::move(pts));
  detail::ensure(out.size() >= 2 * k, "monotone extraction came up short");
  return out;
}

/// Minimum length of a parallel alternation that split_parallel accepts.
/// Even k needs 2k+2 (and at least 10). Odd k needs 2k+4: simple subsets
/// of a parallel alternation have even length, so each half needs k+1
/// entries after the two ends are dropped.
inline int split_parallel_min_length(int k) {
  return std::max(10, k % 2 == 0 ? 2 * k + 2 : 2 * k + 4);
}

/// Two disjoint simple subsets of a parallel alternation, each of size
/// >= k. The length is read along the interleaving axis; the two end
/// entries are dropped and the remaining consecutive pairs are dealt
/// alternately to the two outputs.
inline std::pair<PointSubset, PointSubset> split_parallel(
    const Permutation& alt, int k) {
  detail::require(k >= 1, "k must be at least 1");
  auto cls = classify_alternation(alt);
  detail::require(cls && cls->shape == AlternationShape::parallel,
                  "input is not a parallel alternation");
  detail::require(alt.size() >= split_parallel_min_length(k),
                  "parallel alternation too short: need length >= " +
                      std::to_string(split_parallel_min_length(k)));

  const bool horizontal = !classify_vertical(alt).has_value() ||
                          classify_vertical(alt)->shape !=
                              AlternationShape::parallel;
  const Permutation vert = horizontal ? alt.inverse() : alt;
  const int n = vert.size();
  const int per_side = (k + 1) / 2;  // pairs needed by each output

  std::vector<Point> a, b;
  int dealt_a = 0, dealt_b = 0;
  for (int first = 2, turn = 0; first + 1 <= n - 1; first += 2, ++turn) {
    auto& dst = (turn % 2 == 0) ? a : b;
    auto& dealt = (turn % 2 == 0) ? dealt_a : dealt_b;
    if (dealt == per_side) continue;
    dst.push_back(vert.point(first));
    dst.push_back(vert.point(first + 1));
    ++dealt;
  }
  if (horizontal) {
    a = detail::transpose_points(a);
    b = detail::transpose_points(b);
  }
  PointSubset sa(alt, std::move(a)), sb(alt, std::move(b));
  detail::ensure(sa.size() >= k && sb.size() >= k,
                 "parallel split produced a short half");
  detail::ensure(is_simple(sa) && is_simple(sb),
                 "parallel split produced a non-simple half");
  detail::ensure(sa.overlap(sb) == 0, "parallel split halves overlap");
  return {std::move(sa), std::move(sb)};
}

}  // namespace pinlab
