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

/// @file permutation.hpp
/// @brief Permutations in one-line notation, plot points, boxes and point
/// subsets.
///
/// Everything is 1-based: a permutation of length n is a bijection on
/// {1..n}, and its plot is the point set {(i, pi(i))}. The horizontal
/// coordinate of a point is its index, the vertical one its value.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pinlab/error.hpp"

namespace pinlab {

/// One point of a permutation plot.
struct Point {
  int index = 0;  // x
  int value = 0;  // y

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.index << ',' << p.value << ')';
}

/// Closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi].
struct Box {
  int x_lo = 0;
  int x_hi = 0;
  int y_lo = 0;
  int y_hi = 0;

  static constexpr Box of(const Point& p) {
    return {p.index, p.index, p.value, p.value};
  }

  /// rect(points): the smallest box containing every point. Requires a
  /// nonempty range.
  static Box bounding(std::span<const Point> pts) {
    detail::require(!pts.empty(), "bounding box of an empty point set");
    Box b = of(pts.front());
    for (const auto& p : pts.subspan(1)) b.include(p);
    return b;
  }

  constexpr void include(const Point& p) {
    x_lo = std::min(x_lo, p.index);
    x_hi = std::max(x_hi, p.index);
    y_lo = std::min(y_lo, p.value);
    y_hi = std::max(y_hi, p.value);
  }

  constexpr void include(const Box& o) {
    x_lo = std::min(x_lo, o.x_lo);
    x_hi = std::max(x_hi, o.x_hi);
    y_lo = std::min(y_lo, o.y_lo);
    y_hi = std::max(y_hi, o.y_hi);
  }

  [[nodiscard]] constexpr bool contains(const Point& p) const {
    return x_lo <= p.index && p.index <= x_hi && y_lo <= p.value &&
           p.value <= y_hi;
  }

  /// True when p lies outside the box but strictly inside one of its two
  /// open coordinate spans.
  [[nodiscard]] constexpr bool sliced_by(const Point& p) const {
    if (contains(p)) return false;
    return (x_lo < p.index && p.index < x_hi) ||
           (y_lo < p.value && p.value < y_hi);
  }

  friend constexpr bool operator==(const Box&, const Box&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Box& b) {
  return os << '[' << b.x_lo << ',' << b.x_hi << "]x[" << b.y_lo << ','
            << b.y_hi << ']';
}

/// A permutation of {1..n} in one-line notation. Immutable once built; the
/// constructor rejects anything that is not a bijection.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate();
  }

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  static Permutation decreasing(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
  }

  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] bool empty() const { return values_.empty(); }

  /// pi(i) for 1 <= i <= n.
  [[nodiscard]] int operator()(int index) const {
    return values_[static_cast<std::size_t>(index - 1)];
  }

  [[nodiscard]] Point point(int index) const { return {index, (*this)(index)}; }

  /// Index holding the given value (the inverse map).
  [[nodiscard]] int index_of(int value) const {
    auto it = std::find(values_.begin(), values_.end(), value);
    return static_cast<int>(it - values_.begin()) + 1;
  }

  [[nodiscard]] bool has_point(const Point& p) const {
    return p.index >= 1 && p.index <= size() && (*this)(p.index) == p.value;
  }

  [[nodiscard]] std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(values_.size());
    for (int i = 1; i <= size(); ++i) out.push_back(point(i));
    return out;
  }

  [[nodiscard]] std::span<const int> values() const { return values_; }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 1; i <= size(); ++i)
      inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  void validate() const {
    std::vector<char> seen(values_.size() + 1, 0);
    const int n = size();
    for (int v : values_) {
      if (v < 1 || v > n)
        throw ParseError("value " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError("duplicate value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  std::vector<int> values_;
};

/// Whitespace-separated one-line notation.
inline std::string format_permutation(const Permutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(pi(i));
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  return os << format_permutation(pi);
}

/// Parses one-line notation. Tokens are separated by whitespace and/or
/// commas; a single token made of two or more digits is read digit by digit
/// (compact form, n <= 9).
inline Permutation parse_permutation(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t segments = 0;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto segment = text.substr(pos, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - pos);
    ++segments;
    std::istringstream is{std::string(segment)};
    std::string tok;
    std::size_t in_segment = 0;
    while (is >> tok) {
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(std::string("unexpected character '") + ch + "'");
      tokens.push_back(tok);
      ++in_segment;
    }
    if (in_segment == 0 && (segments > 1 || comma != std::string_view::npos))
      throw ParseError("empty token");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    if (tokens[0].size() > 9)
      throw ParseError("compact digit form is only accepted for n <= 9");
    for (char d : tokens[0]) values.push_back(d - '0');
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 6) throw ParseError("value " + t + " out of range");
      values.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(values));
}

/// The unique permutation order isomorphic to a sequence of distinct values.
inline Permutation pattern_of(std::span<const int> seq) {
  std::vector<std::size_t> order(seq.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> ranks(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]])
      throw Error("pattern_of: values are not distinct");
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

inline Permutation pattern_of(std::initializer_list<int> seq) {
  return pattern_of(std::span<const int>(seq.begin(), seq.size()));
}

/// A set of plot points of a host permutation, kept sorted by index.
class PointSubset {
 public:
  PointSubset() = default;

  PointSubset(Permutation host, std::vector<Point> pts)
      : host_(std::move(host)), points_(std::move(pts)) {
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      detail::require(host_.has_point(points_[i]),
                      "point not in the host plot");
      if (i > 0)
        detail::require(points_[i].index != points_[i - 1].index,
                        "two points share an index");
    }
  }

  static PointSubset from_indices(const Permutation& host,
                                  std::span<const int> indices) {
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (int i : indices) {
      detail::require(i >= 1 && i <= host.size(), "index out of range");
      pts.push_back(host.point(i));
    }
    return PointSubset(host, std::move(pts));
  }

  static PointSubset from_indices(const Permutation& host,
                                  std::initializer_list<int> indices) {
    return from_indices(host,
                        std::span<const int>(indices.begin(), indices.size()));
  }

  static PointSubset all(const Permutation& host) {
    return PointSubset(host, host.points());
  }

  [[nodiscard]] const Permutation& host() const { return host_; }
  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] int size() const { return static_cast<int>(points_.size()); }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.index);
    return out;
  }

  [[nodiscard]] bool contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  /// Order-isomorphic pattern of the subset.
  [[nodiscard]] Permutation pattern() const {
    std::vector<int> vals;
    vals.reserve(points_.size());
    for (const auto& p : points_) vals.push_back(p.value);
    return pattern_of(vals);
  }

  /// Number of points shared with another subset of the same host.
  [[nodiscard]] int overlap(const PointSubset& other) const {
    int c = 0;
    for (const auto& p : points_)
      if (other.contains(p)) ++c;
    return c;
  }

  friend bool operator==(const PointSubset& a, const PointSubset& b) {
    return a.host_ == b.host_ && a.points_ == b.points_;
  }

 private:
  Permutation host_;
  std::vector<Point> points_;
};

inline Permutation pattern_of(const PointSubset& sub) { return sub.pattern(); }

inline std::string format_points(std::span<const Point> pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << pts[i].index << ',' << pts[i].value;
  }
  return os.str();
}

/// Parses "index,value" pairs separated by whitespace, e.g. "3,2 5,5".
inline std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == tok.size())
      throw ParseError("expected index,value but got '" + tok + "'");
    auto digits = [&](std::string_view s) {
      if (s.empty() || s.size() > 6 ||
          !std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad coordinate in '" + tok + "'");
      return std::stoi(std::string(s));
    };
    std::string_view sv(tok);
    out.push_back({digits(sv.substr(0, comma)), digits(sv.substr(comma + 1))});
  }
  return out;
}

}  // namespace pinlab
