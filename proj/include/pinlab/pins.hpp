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

/// @file pins.hpp
/// @brief Pin sequences: validation, properness, enumeration, right-reaching
/// construction and extraction of simple subsets.
///
/// A pin sequence p1, p2, ... is a list of plot points where every p_i with
/// i >= 3 lies outside rect(p1..p_{i-1}) and slices it horizontally or
/// vertically. It is proper when
///   * maximality: every pin is the extreme point in its direction, and
///   * separation: p_{i+1} lies strictly between rect(p1..p_{i-1}) and p_i
///     along some axis.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/permutation.hpp"

namespace pinlab {

enum class Direction { none, left, right, up, down };

/// Search order used wherever a deterministic direction preference is
/// needed.
inline constexpr std::array<Direction, 4> kDirectionPreference = {
    Direction::right, Direction::up, Direction::left, Direction::down};

inline char direction_code(Direction d) {
  switch (d) {
    case Direction::left: return 'L';
    case Direction::right: return 'R';
    case Direction::up: return 'U';
    case Direction::down: return 'D';
    case Direction::none: break;
  }
  return '-';
}

inline const char* direction_name(Direction d) {
  switch (d) {
    case Direction::left: return "left";
    case Direction::right: return "right";
    case Direction::up: return "up";
    case Direction::down: return "down";
    case Direction::none: break;
  }
  return "none";
}

inline bool horizontal(Direction d) {
  return d == Direction::left || d == Direction::right;
}
inline bool vertical(Direction d) {
  return d == Direction::up || d == Direction::down;
}

/// Side of the box that p slices, or none if p is outside both open spans.
/// Throws when p lies inside the box.
inline Direction slice_direction(const Box& box, const Point& p) {
  if (box.contains(p)) throw Error("pin lies inside the rectangle it slices");
  const bool in_x = box.x_lo < p.index && p.index < box.x_hi;
  const bool in_y = box.y_lo < p.value && p.value < box.y_hi;
  if (in_y) return p.index > box.x_hi ? Direction::right : Direction::left;
  if (in_x) return p.value > box.y_hi ? Direction::up : Direction::down;
  return Direction::none;
}

/// True when q lies strictly between the box and p along some axis.
inline bool separates(const Box& box, const Point& p, const Point& q) {
  if (p.index > box.x_hi && box.x_hi < q.index && q.index < p.index)
    return true;
  if (p.index < box.x_lo && p.index < q.index && q.index < box.x_lo)
    return true;
  if (p.value > box.y_hi && box.y_hi < q.value && q.value < p.value)
    return true;
  if (p.value < box.y_lo && p.value < q.value && q.value < box.y_lo)
    return true;
  return false;
}

/// The extreme pin of `host` slicing `box` from side `dir`, if any.
inline std::optional<Point> maximal_pin(const Permutation& host,
                                        const Box& box, Direction dir) {
  std::optional<Point> best;
  for (int i = 1; i <= host.size(); ++i) {
    const Point p = host.point(i);
    if (box.contains(p)) continue;
    const bool in_x = box.x_lo < p.index && p.index < box.x_hi;
    const bool in_y = box.y_lo < p.value && p.value < box.y_hi;
    switch (dir) {
      case Direction::right:
        if (in_y && p.index > box.x_hi && (!best || p.index > best->index))
          best = p;
        break;
      case Direction::left:
        if (in_y && p.index < box.x_lo && (!best || p.index < best->index))
          best = p;
        break;
      case Direction::up:
        if (in_x && p.value > box.y_hi && (!best || p.value > best->value))
          best = p;
        break;
      case Direction::down:
        if (in_x && p.value < box.y_lo && (!best || p.value < best->value))
          best = p;
        break;
      case Direction::none:
        break;
    }
  }
  return best;
}

/// Maximality of pin p (direction dir) for `box`: the region beyond p on
/// its side, within the box's span, holds no host point.
inline bool is_maximal(const Permutation& host, const Box& box, const Point& p,
                       Direction dir) {
  auto best = maximal_pin(host, box, dir);
  return best && *best == p;
}

struct PinViolation {
  int index = 0;  // 1-based position of the offending pin
  std::string reason;
};

/// A validated pin sequence with per-pin directions. Only produced by
/// validate_pin_sequence and the constructions below.
class PinSequence {
 public:
  [[nodiscard]] const Permutation& host() const { return host_; }
  [[nodiscard]] std::span<const Point> pins() const { return pins_; }
  [[nodiscard]] std::span<const Direction> directions() const { return dirs_; }
  [[nodiscard]] int size() const { return static_cast<int>(pins_.size()); }
  [[nodiscard]] const Point& pin(int i) const {
    return pins_[static_cast<std::size_t>(i - 1)];
  }
  [[nodiscard]] Direction direction(int i) const {
    return dirs_[static_cast<std::size_t>(i - 1)];
  }

  /// rect(p1..p_len).
  [[nodiscard]] Box box(int len) const {
    return Box::bounding(std::span<const Point>(pins_).first(
        static_cast<std::size_t>(len)));
  }
  [[nodiscard]] Box box() const { return box(size()); }

  [[nodiscard]] PinSequence prefix(int len) const {
    PinSequence out = *this;
    out.pins_.resize(static_cast<std::size_t>(len));
    out.dirs_.resize(static_cast<std::size_t>(len));
    return out;
  }

  [[nodiscard]] std::string direction_string() const {
    std::string out;
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
      if (i) out += ',';
      out += direction_code(dirs_[i]);
    }
    return out;
  }

  [[nodiscard]] PointSubset as_subset() const {
    return PointSubset(host_, pins_);
  }

  friend bool operator==(const PinSequence& a, const PinSequence& b) {
    return a.host_ == b.host_ && a.pins_ == b.pins_;
  }

 private:
  friend std::variant<PinSequence, PinViolation> validate_pin_sequence(
      const Permutation&, std::span<const Point>);
  friend class PinBuilder;

  Permutation host_;
  std::vector<Point> pins_;
  std::vector<Direction> dirs_;
};

inline std::variant<PinSequence, PinViolation> validate_pin_sequence(
    const Permutation& host, std::span<const Point> pts) {
  if (pts.size() < 2) return PinViolation{0, "fewer than two points"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!host.has_point(pts[i]))
      return PinViolation{static_cast<int>(i) + 1, "point not in host plot"};
    for (std::size_t j = 0; j < i; ++j)
      if (pts[j] == pts[i])
        return PinViolation{static_cast<int>(i) + 1, "repeated point"};
  }
  PinSequence seq;
  seq.host_ = host;
  seq.pins_.assign(pts.begin(), pts.end());
  seq.dirs_.assign(pts.size(), Direction::none);
  Box box = Box::of(pts[0]);
  box.include(pts[1]);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (box.contains(pts[i]))
      return PinViolation{static_cast<int>(i) + 1,
                          "lies inside the rectangle of the earlier pins"};
    const Direction d = slice_direction(box, pts[i]);
    if (d == Direction::none)
      return PinViolation{static_cast<int>(i) + 1,
                          "slices neither axis of the rectangle"};
    seq.dirs_[i] = d;
    box.include(pts[i]);
  }
  return seq;
}

/// Throwing convenience wrapper.
inline PinSequence make_pin_sequence(const Permutation& host,
                                     std::span<const Point> pts) {
  auto r = validate_pin_sequence(host, pts);
  if (auto* v = std::get_if<PinViolation>(&r))
    throw Error("invalid pin sequence at pin " + std::to_string(v->index) +
                ": " + v->reason);
  return std::get<PinSequence>(std::move(r));
}

inline PinSequence make_pin_sequence(const Permutation& host,
                                     std::initializer_list<Point> pts) {
  return make_pin_sequence(host,
                           std::span<const Point>(pts.begin(), pts.size()));
}

/// Appends pins one at a time, keeping the running rectangle. Every pin
/// pushed must be valid for the current rectangle.
class PinBuilder {
 public:
  PinBuilder(const Permutation& host, Point p1, Point p2) {
    seq_.host_ = host;
    seq_.pins_ = {p1, p2};
    seq_.dirs_ = {Direction::none, Direction::none};
    box_ = Box::of(p1);
    box_.include(p2);
  }

  [[nodiscard]] const Box& box() const { return box_; }
  [[nodiscard]] const PinSequence& sequence() const { return seq_; }
  [[nodiscard]] int size() const { return seq_.size(); }

  void push(const Point& p, Direction d) {
    seq_.pins_.push_back(p);
    seq_.dirs_.push_back(d);
    boxes_.push_back(box_);
    box_.include(p);
  }

  void pop() {
    seq_.pins_.pop_back();
    seq_.dirs_.pop_back();
    box_ = boxes_.back();
    boxes_.pop_back();
  }

  /// rect of all pins but the last.
  [[nodiscard]] Box previous_box() const {
    return boxes_.empty() ? Box::of(seq_.pins_.front()) : boxes_.back();
  }

 private:
  PinSequence seq_;
  Box box_;
  std::vector<Box> boxes_;
};

struct PinProperness {
  int index = 0;  // pin number, >= 3
  bool maximality_ok = true;
  bool separation_ok = true;
};

/// Per-pin maximality and separation flags. The separation flag of pin i
/// records whether p_i separates p_{i-1} from rect(p1..p_{i-2}); the last
/// pin carries no separation obligation of its own.
struct PropernessReport {
  std::vector<PinProperness> pins;

  [[nodiscard]] bool proper() const {
    for (const auto& p : pins)
      if (!p.maximality_ok || !p.separation_ok) return false;
    return true;
  }

  [[nodiscard]] std::vector<int> maximality_failures() const {
    std::vector<int> out;
    for (const auto& p : pins)
      if (!p.maximality_ok) out.push_back(p.index);
    return out;
  }

  [[nodiscard]] std::vector<int> separation_failures() const {
    std::vector<int> out;
    for (const auto& p : pins)
      if (!p.separation_ok) out.push_back(p.index);
    return out;
  }
};

inline PropernessReport properness_report(const PinSequence& seq) {
  PropernessReport report;
  const auto& host = seq.host();
  for (int i = 3; i <= seq.size(); ++i) {
    PinProperness flags;
    flags.index = i;
    const Box before = seq.box(i - 1);
    flags.maximality_ok =
        is_maximal(host, before, seq.pin(i), seq.direction(i));
    flags.separation_ok = separates(seq.box(i - 2), seq.pin(i - 1), seq.pin(i));
    report.pins.push_back(flags);
  }
  return report;
}

inline bool is_proper(const PinSequence& seq) {
  return properness_report(seq).proper();
}

/// rect(p1..p_m) covers the whole [1,n] x [1,n] square.
inline bool is_saturated(const PinSequence& seq) {
  const int n = seq.host().size();
  return seq.box() == Box{1, n, 1, n};
}

/// Last pin is the right-most point of the host.
inline bool is_right_reaching(const PinSequence& seq) {
  return seq.pins().back().index == seq.host().size();
}

/// Visits every proper pin sequence starting with (p1, p2) of length at
/// most max_len, depth first with children in kDirectionPreference order.
/// The visitor returns false to prune the subtree below the sequence it was
/// just shown.
template <class Visit>
void for_each_proper_pin_sequence(const Permutation& host, Point p1,
                                  Point p2, int max_len, Visit&& visit) {
  detail::require(host.has_point(p1) && host.has_point(p2),
                  "starting points must lie in the host plot");
  detail::require(p1 != p2, "starting points must differ");
  PinBuilder b(host, p1, p2);
  std::function<void()> rec = [&]() {
    if (!visit(b.sequence())) return;
    if (b.size() >= max_len) return;
    const Box box = b.box();
    const Box prev = b.previous_box();
    const Point last = b.sequence().pins().back();
    for (Direction d : kDirectionPreference) {
      auto pin = maximal_pin(host, box, d);
      if (!pin) continue;
      if (b.size() >= 2 && !separates(prev, last, *pin)) continue;
      b.push(*pin, d);
      rec();
      b.pop();
    }
  };
  rec();
}

inline std::vector<PinSequence> enumerate_proper_pin_sequences(
    const Permutation& host, Point p1, Point p2, int max_len) {
  std::vector<PinSequence> out;
  for_each_proper_pin_sequence(host, p1, p2, max_len,
                               [&](const PinSequence& s) {
                                 out.push_back(s);
                                 return true;
                               });
  return out;
}

/// Extends (p1, p2) by maximal pins, taking the first available direction
/// in kDirectionPreference, until the rectangle covers the plot or no pin
/// exists.
inline PinSequence greedy_maximal_sequence(const Permutation& host, Point p1,
                                           Point p2) {
  PinBuilder b(host, p1, p2);
  const int n = host.size();
  while (b.box() != Box{1, n, 1, n}) {
    bool extended = false;
    for (Direction d : kDirectionPreference) {
      if (auto pin = maximal_pin(host, b.box(), d)) {
        b.push(*pin, d);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return b.sequence();
}

/// A proper pin sequence from (p1, p2) whose last pin is the right-most
/// point of the host.
///
/// Builds a saturated maximal sequence q1..qM, then walks back from the
/// right-most point q_{i1}: i_{t+1} is the least index with q1..q_{i_{t+1}},
/// q_{i_t} valid, until the chain reaches q2. The reversed chain
/// p1, p2, q_{i_m}, ..., q_{i_1} is the result.
///
/// The construction cannot fail on a simple host, so a failure there is an
/// InvariantViolation. Non-simple hosts are attempted too; if the maximal
/// sequence gets stuck or the chain comes out improper, that is reported as
/// an Error.
inline PinSequence right_reaching_proper(const Permutation& host, Point p1,
                                         Point p2) {
  const int n = host.size();
  detail::require(host.has_point(p1) && host.has_point(p2) && p1 != p2,
                  "starting points must be two distinct host points");
  detail::require(p1.index != n, "p1 is the right-most point");
  const bool simple = is_simple(host);
  auto check = [&](bool ok, const char* what) {
    if (ok) return;
    if (simple) throw InvariantViolation(what);
    throw Error(std::string("host is not simple: ") + what);
  };

  const PinSequence sat = greedy_maximal_sequence(host, p1, p2);
  check(is_saturated(sat), "maximal sequence failed to saturate");

  int i_t = 0;
  for (int i = 1; i <= sat.size(); ++i)
    if (sat.pin(i).index == n) i_t = i;
  std::vector<int> chain{i_t};
  while (i_t > 2) {
    int next = 0;
    for (int j = 2; j < i_t; ++j) {
      const Box b = sat.box(j);
      if (!b.contains(sat.pin(i_t)) &&
          slice_direction(b, sat.pin(i_t)) != Direction::none) {
        next = j;
        break;
      }
    }
    check(next != 0, "right-reaching chain broke");
    chain.push_back(next);
    i_t = next;
  }
  std::vector<Point> pts{p1, p2};
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    if (*it > 2) pts.push_back(sat.pin(*it));

  auto r = validate_pin_sequence(host, pts);
  check(std::holds_alternative<PinSequence>(r),
        "right-reaching construction produced an invalid sequence");
  PinSequence out = std::get<PinSequence>(std::move(r));
  check(is_proper(out),
        "right-reaching construction produced an improper sequence");
  check(is_right_reaching(out), "sequence is not right-reaching");
  return out;
}

/// First of {all pins, all but p1, all but p2} whose pattern is simple.
/// Returns nullopt if none is. For proper sequences this happens only at
/// length 4, where both drop candidates have 3 points; e.g. host 2 4 1 5 3
/// with pins (1,2),(2,4),(5,3),(4,5), whose pattern is 1342.
inline std::optional<PointSubset> first_simple_candidate(
    const Permutation& host, std::span<const Point> pins) {
  std::vector<Point> all(pins.begin(), pins.end());
  if (is_simple_points(all)) return PointSubset(host, all);
  if (all.size() >= 2) {
    for (std::size_t drop = 0; drop < 2; ++drop) {
      std::vector<Point> cand;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (i != drop) cand.push_back(all[i]);
      if (is_simple_points(cand)) return PointSubset(host, cand);
    }
  }
  return std::nullopt;
}

inline PointSubset simple_pin_subset(const PinSequence& seq) {
  auto sub = first_simple_candidate(seq.host(), seq.pins());
  if (!sub) throw Error("no simple candidate among the pins");
  return *std::move(sub);
}

/// A block of split_pin_sequence has no simple candidate, or the suffix
/// block p_{k+2}..p_{2k+2} fails to validate as a pin sequence on its own.
/// block is 1 for the prefix and 2 for the suffix.
class PinBlockError : public Error {
 public:
  PinBlockError(const std::string& what, int block, PinViolation v)
      : Error(what), block(block), violation(std::move(v)) {}
  int block;
  PinViolation violation;
};

/// Two disjoint simple subsets of size >= k from a proper sequence of
/// length >= 2k+2: one from p1..p_{k+1}, one from p_{k+2}..p_{2k+2}.
inline std::pair<PointSubset, PointSubset> split_pin_sequence(
    const PinSequence& seq, int k) {
  detail::require(k >= 1, "k must be at least 1");
  detail::require(seq.size() >= 2 * k + 2, "pin sequence too short for k");
  const auto pins = seq.pins();
  const auto head = pins.first(static_cast<std::size_t>(k + 1));
  const auto tail = pins.subspan(static_cast<std::size_t>(k + 1),
                                 static_cast<std::size_t>(k + 1));

  auto first = first_simple_candidate(seq.host(), head);
  if (!first)
    throw PinBlockError("prefix block has no simple candidate", 1,
                        PinViolation{0, "no simple candidate"});

  auto checked = validate_pin_sequence(seq.host(), tail);
  if (auto* v = std::get_if<PinViolation>(&checked))
    throw PinBlockError("suffix block is not a pin sequence (pin " +
                            std::to_string(v->index) + ": " + v->reason + ")",
                        2, *v);
  auto second = first_simple_candidate(seq.host(), tail);
  if (!second)
    throw PinBlockError("suffix block has no simple candidate", 2,
                        PinViolation{0, "no simple candidate"});
  return {*std::move(first), *std::move(second)};
}

}  // namespace pinlab
