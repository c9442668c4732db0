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


/// @file plot.hpp
/// @brief Permutation plots: index on the horizontal axis, value on the
/// vertical, as ASCII text or SVG, optionally with pin rectangles and pin
/// lines drawn over the points.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "pinlab/permutation.hpp"
#include "pinlab/pins.hpp"

namespace pinlab {

/// One row per value from n down to 1 on a '.' grid; 'o' marks a point and,
/// with pins, a digit marks pin j (j modulo 10).
inline std::string ascii_plot(const Permutation& pi,
                              const PinSequence* pins = nullptr) {
  const int n = pi.size();
  std::vector<std::string> rows(static_cast<std::size_t>(n),
                                std::string(static_cast<std::size_t>(2 * n), ' '));
  for (auto& row : rows)
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(2 * i)] = '.';
  for (int i = 1; i <= n; ++i)
    rows[static_cast<std::size_t>(n - pi(i))][static_cast<std::size_t>(2 * i - 2)] = 'o';
  if (pins) {
    for (int j = 1; j <= pins->size(); ++j) {
      const Point p = pins->pin(j);
      rows[static_cast<std::size_t>(n - p.value)][static_cast<std::size_t>(2 * p.index - 2)] =
          static_cast<char>('0' + j % 10);
    }
  }
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    std::string line = rows[static_cast<std::size_t>(r)];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

/// SVG grid plot. With pins, each prefix rectangle rect(p1..p_{i-1}) is
/// drawn dashed and pin i gets a line to the rectangle side it slices.
inline std::string svg_plot(const Permutation& pi,
                            const PinSequence* pins = nullptr) {
  const int n = pi.size();
  const int cell = 24, margin = 24;
  const int size = 2 * margin + cell * std::max(n - 1, 0);
  auto cx = [&](double i) { return margin + (i - 1) * cell; };
  auto cy = [&](double v) { return margin + (n - v) * cell; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 1; i <= n; ++i) {
    os << "<line x1=\"" << cx(i) << "\" y1=\"" << cy(1) << "\" x2=\"" << cx(i)
       << "\" y2=\"" << cy(n) << "\" stroke=\"#ddd\"/>\n";
    os << "<line x1=\"" << cx(1) << "\" y1=\"" << cy(i) << "\" x2=\"" << cx(n)
       << "\" y2=\"" << cy(i) << "\" stroke=\"#ddd\"/>\n";
  }
  if (pins) {
    for (int j = 3; j <= pins->size(); ++j) {
      const Box b = pins->box(j - 1);
      os << "<rect x=\"" << cx(b.x_lo) << "\" y=\"" << cy(b.y_hi)
         << "\" width=\"" << cell * (b.x_hi - b.x_lo) << "\" height=\""
         << cell * (b.y_hi - b.y_lo)
         << "\" fill=\"none\" stroke=\"#88a\" stroke-dasharray=\"4 3\"/>\n";
      const Point p = pins->pin(j);
      double x2 = p.index, y2 = p.value;
      switch (pins->direction(j)) {
        case Direction::right: x2 = b.x_lo; break;
        case Direction::left: x2 = b.x_hi; break;
        case Direction::up: y2 = b.y_lo; break;
        case Direction::down: y2 = b.y_hi; break;
        case Direction::none: break;
      }
      os << "<line x1=\"" << cx(p.index) << "\" y1=\"" << cy(p.value)
         << "\" x2=\"" << cx(x2) << "\" y2=\"" << cy(y2)
         << "\" stroke=\"#c33\"/>\n";
    }
  }
  for (int i = 1; i <= n; ++i)
    os << "<circle cx=\"" << cx(i) << "\" cy=\"" << cy(pi(i))
       << "\" r=\"5\" fill=\"black\"/>\n";
  if (pins) {
    for (int j = 1; j <= pins->size(); ++j) {
      const Point p = pins->pin(j);
      os << "<text x=\"" << cx(p.index) + 7 << "\" y=\"" << cy(p.value) - 7
         << "\" font-size=\"11\" fill=\"#c33\">p" << j << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pinlab
