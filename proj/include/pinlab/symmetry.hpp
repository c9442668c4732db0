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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pinlab/permutation.hpp"

namespace pinlab {

/// An element of the dihedral group of the square acting on permutation
/// plots. Acts on a point by an optional transpose (inverse) followed by
/// optional reflections x -> n+1-x (reverse) and y -> n+1-y (complement).
struct Symmetry {
  bool transpose = false;
  bool flip_x = false;
  bool flip_y = false;

  static constexpr Symmetry identity() { return {}; }
  static constexpr Symmetry reverse() { return {false, true, false}; }
  static constexpr Symmetry complement() { return {false, false, true}; }
  static constexpr Symmetry inverse() { return {true, false, false}; }

  /// All eight elements, identity first.
  static constexpr std::array<Symmetry, 8> all() {
    std::array<Symmetry, 8> out{};
    for (int m = 0; m < 8; ++m)
      out[static_cast<std::size_t>(m)] = {(m & 4) != 0, (m & 1) != 0,
                                          (m & 2) != 0};
    return out;
  }

  [[nodiscard]] constexpr Point apply(const Point& p, int n) const {
    Point q = transpose ? Point{p.value, p.index} : p;
    if (flip_x) q.index = n + 1 - q.index;
    if (flip_y) q.value = n + 1 - q.value;
    return q;
  }

  /// Element that undoes this one.
  [[nodiscard]] constexpr Symmetry inverted() const {
    // (F T)^-1 = T F^-1 = F' T where F' has the flags swapped by T.
    if (!transpose) return *this;
    return {true, flip_y, flip_x};
  }

  /// Component names in order of application, e.g. "inverse+reverse".
  [[nodiscard]] std::string name() const {
    std::string out;
    auto add = [&](std::string_view part) {
      if (!out.empty()) out += '+';
      out += part;
    };
    if (transpose) add("inverse");
    if (flip_x) add("reverse");
    if (flip_y) add("complement");
    return out.empty() ? "identity" : out;
  }

  friend constexpr bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// a after b: compose(a, b).apply(p) == a.apply(b.apply(p)).
constexpr Symmetry compose(const Symmetry& a, const Symmetry& b) {
  bool bx = b.flip_x, by = b.flip_y;
  if (a.transpose) std::swap(bx, by);
  return {a.transpose != b.transpose, a.flip_x != bx, a.flip_y != by};
}

inline Permutation apply_symmetry(const Permutation& pi, const Symmetry& s) {
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Point q = s.apply(pi.point(i), n);
    out[static_cast<std::size_t>(q.index - 1)] = q.value;
  }
  return Permutation(std::move(out));
}

inline std::vector<Point> apply_symmetry(std::span<const Point> pts, int n,
                                         const Symmetry& s) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(s.apply(p, n));
  return out;
}

inline PointSubset apply_symmetry(const PointSubset& sub, const Symmetry& s) {
  const int n = sub.host().size();
  return PointSubset(apply_symmetry(sub.host(), s),
                     apply_symmetry(sub.points(), n, s));
}

inline Permutation reverse(const Permutation& pi) {
  return apply_symmetry(pi, Symmetry::reverse());
}
inline Permutation complement(const Permutation& pi) {
  return apply_symmetry(pi, Symmetry::complement());
}

}  // namespace pinlab
