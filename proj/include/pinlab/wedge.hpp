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

/// @file wedge.hpp
/// @brief Wedge simple permutations (two families, eight orientations each),
/// their almost-disjoint splitting, and the wedge-point ledger that turns a
/// long wedge alternation into a long pin sequence or a wedge simple
/// permutation.
///
/// Base forms for half-length m:
///   type 2: m, 2m, m-1, m+1, m-2, m+2, ..., 1, 2m-1
///   type 1: m+1, m-1, m+2, m-2, ..., 2m-1, 1, 2m, m

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pinlab/alternations.hpp"
#include "pinlab/containment.hpp"
#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/permutation.hpp"
#include "pinlab/pins.hpp"
#include "pinlab/symmetry.hpp"

namespace pinlab {

enum class WedgeType { type1 = 1, type2 = 2 };

struct WedgeSpec {
  WedgeType type = WedgeType::type2;
  int m = 2;  // half length; the permutation has length 2m
  Symmetry orientation{};

  [[nodiscard]] int length() const { return 2 * m; }

  friend bool operator==(const WedgeSpec&, const WedgeSpec&) = default;
};

inline int min_wedge_length(WedgeType t) {
  return t == WedgeType::type2 ? 4 : 6;
}

inline Permutation wedge_base(WedgeType type, int m) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(2 * m));
  if (type == WedgeType::type2) {
    v.push_back(m);
    v.push_back(2 * m);
    for (int j = 1; j < m; ++j) {
      v.push_back(m - j);
      v.push_back(m + j);
    }
  } else {
    for (int j = 1; j < m; ++j) {
      v.push_back(m + j);
      v.push_back(m - j);
    }
    v.push_back(2 * m);
    v.push_back(m);
  }
  return Permutation(std::move(v));
}

inline Permutation generate_wedge_simple(const WedgeSpec& spec) {
  detail::require(spec.length() >= min_wedge_length(spec.type),
                  spec.type == WedgeType::type2
                      ? "type 2 wedge simple needs length >= 4"
                      : "type 1 wedge simple needs length >= 6");
  Permutation base = wedge_base(spec.type, spec.m);
  detail::ensure(is_simple(base), "wedge family member is not simple");
  return apply_symmetry(base, spec.orientation);
}

/// Membership in either family under any orientation. Only even lengths
/// qualify. Type 2 and the identity orientation are tried first.
inline std::optional<WedgeSpec> is_wedge_simple(const Permutation& pi) {
  const int n = pi.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (WedgeType t : {WedgeType::type2, WedgeType::type1}) {
    if (n < min_wedge_length(t)) continue;
    const Permutation base = wedge_base(t, n / 2);
    for (const Symmetry& s : Symmetry::all())
      if (apply_symmetry(base, s) == pi) return WedgeSpec{t, n / 2, s};
  }
  return std::nullopt;
}

namespace detail {

/// Position sets (1-based, base orientation) of the two halves of a split.
using IndexSplit = std::pair<std::vector<int>, std::vector<int>>;

/// Type 2: both halves keep the anchors at positions 1, 2 and take r of the
/// pairs (2j+1, 2j+2), dealt in snake order A B B A A B B A ...
inline IndexSplit type2_split(int m, int k) {
  const int r = std::max(1, (k - 1) / 2);  // 2r + 2 >= k
  IndexSplit out{{1, 2}, {1, 2}};
  int got_a = 0, got_b = 0;
  for (int j = 1; j < m && (got_a < r || got_b < r); ++j) {
    const bool to_a = ((j - 1) % 4 == 0 || (j - 1) % 4 == 3);
    auto& dst = to_a ? out.first : out.second;
    auto& got = to_a ? got_a : got_b;
    if (got == r) continue;
    dst.push_back(2 * j + 1);
    dst.push_back(2 * j + 2);
    ++got;
  }
  return out;
}

/// Type 1, shared tip at position 2m. Half A takes positions 1..k-2 plus
/// the maximum at 2m-1; half B takes k-1..2k-3 and uses its last upper
/// entry as maximum.
inline IndexSplit type1_split_top(int m, int k) {
  IndexSplit out;
  for (int i = 1; i <= k - 2; ++i) out.first.push_back(i);
  out.first.push_back(2 * m - 1);
  out.first.push_back(2 * m);
  for (int i = k - 1; i <= 2 * k - 3; ++i) out.second.push_back(i);
  out.second.push_back(2 * m);
  return out;
}

/// Type 1, shared tip: consecutive runs 1..k-1 and k..2k-2 plus the tip.
inline IndexSplit type1_split_runs(int m, int k) {
  IndexSplit out;
  for (int i = 1; i <= k - 1; ++i) out.first.push_back(i);
  out.first.push_back(2 * m);
  for (int i = k; i <= 2 * k - 2; ++i) out.second.push_back(i);
  out.second.push_back(2 * m);
  return out;
}

}  // namespace detail

/// Two simple subsets of a wedge simple permutation of length >= 2k >= 8,
/// each of size >= k, sharing at most one entry (type 1) or two (type 2).
inline std::pair<PointSubset, PointSubset> split_wedge_simple(
    const Permutation& w, int k) {
  auto spec = is_wedge_simple(w);
  detail::require(spec.has_value(), "input is not a wedge simple permutation");
  detail::require(2 * k >= 8, "k must be at least 4");
  detail::require(w.size() >= 2 * k, "wedge simple permutation too short");
  const int m = spec->m;
  const int max_overlap = spec->type == WedgeType::type1 ? 1 : 2;

  std::vector<detail::IndexSplit> candidates;
  if (spec->type == WedgeType::type2) {
    candidates.push_back(detail::type2_split(m, k));
  } else {
    if (k % 2 == 0) candidates.push_back(detail::type1_split_top(m, k));
    candidates.push_back(detail::type1_split_runs(m, k));
  }

  const Permutation base = wedge_base(spec->type, m);
  for (const auto& [ia, ib] : candidates) {
    auto to_host = [&](const std::vector<int>& idx) {
      std::vector<Point> pts;
      for (int i : idx) pts.push_back(spec->orientation.apply(base.point(i), w.size()));
      return PointSubset(w, std::move(pts));
    };
    PointSubset a = to_host(ia), b = to_host(ib);
    if (a.size() >= k && b.size() >= k && a.overlap(b) <= max_overlap &&
        is_simple(a) && is_simple(b))
      return {std::move(a), std::move(b)};
  }
  throw InvariantViolation("no valid wedge split found");
}

/// One ledger row: pin p_i with its closure rectangle R_i, wedge sum and
/// wedge contribution.
struct WedgeLedgerEntry {
  int pin = 0;
  Point point{};
  Direction direction = Direction::none;
  Box region{};
  int wedge_sum = 0;
  int wedge_contribution = 0;
};

struct WedgeLedger {
  std::vector<WedgeLedgerEntry> entries;
  int wedge_points = 0;

  [[nodiscard]] int contribution_total() const {
    int s = 0;
    for (const auto& e : entries) s += e.wedge_contribution;
    return s;
  }
};

/// Smallest box containing `seed` that no wedge point outside it slices.
inline Box wedge_closure(Box seed, std::span<const Point> wedge) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& w : wedge) {
      if (seed.sliced_by(w)) {
        seed.include(w);
        grew = true;
      }
    }
  }
  return seed;
}

inline int count_inside(const Box& b, std::span<const Point> pts) {
  int c = 0;
  for (const auto& p : pts)
    if (b.contains(p)) ++c;
  return c;
}

/// Ledger of a pin sequence against a set of wedge points. R_1 is p1 alone
/// (so ws(p1) = wc(p1) = 1); for i >= 2, R_i is the wedge closure of
/// rect(p1, p2, p_i) and wc(p_i) = ws(p_i) - ws(p_{i-1}).
inline WedgeLedger wedge_ledger(const PinSequence& seq,
                                std::span<const Point> wedge) {
  WedgeLedger ledger;
  ledger.wedge_points = static_cast<int>(wedge.size());
  int prev = 0;
  for (int i = 1; i <= seq.size(); ++i) {
    WedgeLedgerEntry e;
    e.pin = i;
    e.point = seq.pin(i);
    e.direction = seq.direction(i);
    if (i == 1) {
      e.region = Box::of(seq.pin(1));
      e.wedge_sum = 1;
      e.wedge_contribution = 1;
    } else {
      Box seed = Box::of(seq.pin(1));
      seed.include(seq.pin(2));
      seed.include(seq.pin(i));
      e.region = wedge_closure(seed, wedge);
      e.wedge_sum = count_inside(e.region, wedge);
      e.wedge_contribution = e.wedge_sum - prev;
    }
    prev = e.wedge_sum;
    ledger.entries.push_back(e);
  }
  return ledger;
}

struct WedgeSubset {
  PointSubset points;
  WedgeSpec spec;
};

/// A longest wedge simple subset of length >= len: containment of every
/// family member, from the longest possible length down, type 2 and the
/// identity orientation first.
inline std::optional<WedgeSubset> find_wedge_subset(const Permutation& pi,
                                                    int len) {
  for (int m = pi.size() / 2; 2 * m >= std::max(len, 4); --m) {
    for (WedgeType t : {WedgeType::type2, WedgeType::type1}) {
      if (2 * m < min_wedge_length(t)) continue;
      for (const Symmetry& s : Symmetry::all()) {
        auto hit = copies(generate_wedge_simple({t, m, s}), pi, 1);
        if (hit.empty()) continue;
        PointSubset sub = PointSubset::from_indices(pi, hit.front());
        const WedgeSpec spec = *is_wedge_simple(sub.pattern());
        return WedgeSubset{std::move(sub), spec};
      }
    }
  }
  return std::nullopt;
}

/// Outcome of wedge_to_structure: a long proper pin sequence or a long
/// wedge simple subset, plus the ledger that produced it.
struct WedgeOutcome {
  std::variant<PinSequence, WedgeSubset> structure;
  WedgeLedger ledger;
  Symmetry normalization{};  // maps the original host onto the '<' frame
};

/// Embeds a subset of `outer.pattern()` back into the host of `outer`.
inline PointSubset lift_subset(const PointSubset& outer,
                               const PointSubset& inner) {
  std::vector<Point> pts;
  for (const auto& p : inner.points())
    pts.push_back(outer.points()[static_cast<std::size_t>(p.index - 1)]);
  return PointSubset(outer.host(), std::move(pts));
}

namespace detail {

/// Symmetry taking the wedge points onto a vertical wedge opening right.
inline std::optional<Symmetry> wedge_normalization(const PointSubset& wedge) {
  for (const Symmetry& s : Symmetry::all()) {
    auto c = classify_vertical(apply_symmetry(wedge, s).pattern());
    if (c && c->shape == AlternationShape::wedge &&
        c->orientation == WedgeOrientation::opens_right)
      return s;
  }
  return std::nullopt;
}

/// Pin pairs whose union with R_i \ R_{i-1} wedge points should form a wedge
/// simple permutation, by the directions of p_{i-1} and p_i. The up/down
/// mirror cases follow from the up-down symmetry of a '<' wedge.
inline std::vector<std::pair<int, int>> wedge_pin_pairs(Direction before,
                                                        Direction here,
                                                        int i) {
  std::vector<std::pair<int, int>> out;
  if (before == Direction::none) {  // i == 3: p_{i-1} = p2
    out.push_back({i - 1, i});
    out.push_back({1, i});
    return out;
  }
  if (vertical(before) && here == Direction::right) out.push_back({i - 1, i});
  if (before == Direction::right && vertical(here)) out.push_back({1, i});
  if (before == Direction::left && vertical(here)) out.push_back({i - 1, i});
  return out;
}

inline std::optional<WedgeSubset> wedge_from_ledger(
    const PinSequence& seq, const WedgeLedger& ledger,
    std::span<const Point> wedge, int k) {
  for (int i = 3; i <= seq.size(); ++i) {
    const auto& e = ledger.entries[static_cast<std::size_t>(i - 1)];
    if (e.wedge_contribution < 2 * k - 2) continue;
    const Box& prev = ledger.entries[static_cast<std::size_t>(i - 2)].region;
    std::vector<Point> fresh;
    for (const auto& w : wedge)
      if (e.region.contains(w) && !prev.contains(w)) fresh.push_back(w);
    for (auto [a, b] :
         wedge_pin_pairs(seq.direction(i - 1), seq.direction(i), i)) {
      std::vector<Point> pts = fresh;
      for (int pin : {a, b})
        if (std::find(pts.begin(), pts.end(), seq.pin(pin)) == pts.end())
          pts.push_back(seq.pin(pin));
      PointSubset sub(seq.host(), pts);
      if (sub.size() < 2 * k) continue;
      if (auto spec = is_wedge_simple(sub.pattern()))
        return WedgeSubset{std::move(sub), *spec};
      // The candidate set can hold a wedge simple without being one, e.g.
      // when the wedge alternation has odd length.
      if (auto inner = find_wedge_subset(sub.pattern(), 2 * k)) {
        PointSubset lifted = lift_subset(sub, inner->points);
        return WedgeSubset{std::move(lifted), inner->spec};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Runs the wedge-ledger construction without the length precondition on
/// the wedge alternation. Returns nullopt when neither a proper pin
/// sequence of length >= 2k nor a wedge simple subset of length >= 2k comes
/// out.
inline std::optional<WedgeOutcome> try_wedge_to_structure(
    const Permutation& host, const PointSubset& wedge_points, int k) {
  detail::require(k >= 1, "k must be at least 1");
  detail::require(wedge_points.host() == host,
                  "wedge points belong to a different host");
  detail::require(is_simple(host), "host is not simple");
  auto norm = detail::wedge_normalization(wedge_points);
  detail::require(norm.has_value(), "points do not form a wedge alternation");

  const Symmetry s = *norm;
  const Symmetry back = s.inverted();
  const int n = host.size();
  const Permutation h = apply_symmetry(host, s);
  const PointSubset wedge = apply_symmetry(wedge_points, s);
  const auto wpts = wedge.points();
  if (wpts.size() < 2 || wpts[1].index == n) return std::nullopt;

  const PinSequence seq = right_reaching_proper(h, wpts[0], wpts[1]);
  WedgeOutcome out;
  out.ledger = wedge_ledger(seq, wpts);
  out.normalization = s;

  if (auto ws = detail::wedge_from_ledger(seq, out.ledger, wpts, k)) {
    ws->points = apply_symmetry(ws->points, back);
    ws->spec = *is_wedge_simple(ws->points.pattern());
    out.structure = std::move(*ws);
    return out;
  }
  if (seq.size() >= 2 * k) {
    auto pins = apply_symmetry(seq.pins(), n, back);
    out.structure = make_pin_sequence(host, pins);
    return out;
  }
  return std::nullopt;
}

/// Wedge alternation of length >= 4k^2 in a simple host -> proper pin
/// sequence of length >= 2k or wedge simple subset of length >= 2k.
inline WedgeOutcome wedge_to_structure(const Permutation& host,
                                       const PointSubset& wedge_points,
                                       int k) {
  detail::require(wedge_points.size() >= 4 * k * k,
                  "wedge alternation shorter than 4k^2");
  auto out = try_wedge_to_structure(host, wedge_points, k);
  detail::ensure(out.has_value(),
                 "wedge ledger produced neither a pin sequence nor a wedge");
  return *std::move(out);
}

}  // namespace pinlab
