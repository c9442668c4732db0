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


/// @file decompose.hpp
/// @brief Structure certificates (long proper pin sequence, parallel
/// alternation or wedge simple permutation) and the decomposition of a
/// simple permutation into two simple subsequences sharing at most two
/// entries.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pinlab/alternations.hpp"
#include "pinlab/brute_force.hpp"
#include "pinlab/containment.hpp"
#include "pinlab/error.hpp"
#include "pinlab/intervals.hpp"
#include "pinlab/permutation.hpp"
#include "pinlab/pins.hpp"
#include "pinlab/wedge.hpp"

namespace pinlab {

struct ParallelAlternation {
  PointSubset points;
};

using Certificate = std::variant<PinSequence, ParallelAlternation, WedgeSubset>;

struct StructureCertificate {
  Certificate structure;
  int k = 1;

  [[nodiscard]] const char* kind() const {
    switch (structure.index()) {
      case 0: return "pins";
      case 1: return "parallel";
      default: return "wedge";
    }
  }

  [[nodiscard]] PointSubset points() const {
    return std::visit(
        [](const auto& s) -> PointSubset {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PinSequence>)
            return s.as_subset();
          else
            return s.points;
        },
        structure);
  }

  [[nodiscard]] int size() const { return points().size(); }
};

/// Re-checks a certificate with the checker of its own kind.
inline bool certificate_valid(const StructureCertificate& c) {
  if (c.size() < 2 * c.k) return false;
  if (const auto* seq = std::get_if<PinSequence>(&c.structure)) {
    auto again = validate_pin_sequence(seq->host(), seq->pins());
    return std::holds_alternative<PinSequence>(again) && is_proper(*seq);
  }
  if (const auto* par = std::get_if<ParallelAlternation>(&c.structure)) {
    auto cls = classify_alternation(par->points);
    return cls && cls->shape == AlternationShape::parallel;
  }
  const auto& w = std::get<WedgeSubset>(c.structure);
  return is_simple(w.points) && is_wedge_simple(w.points.pattern()).has_value();
}

/// First proper pin sequence of length >= len, over starting pairs in
/// lexicographic order and depth first within each pair.
inline std::optional<PinSequence> find_proper_pin_sequence(
    const Permutation& pi, int len) {
  const int n = pi.size();
  if (len > n || n < 2) return std::nullopt;
  std::optional<PinSequence> found;
  for (int a = 1; a <= n && !found; ++a) {
    for (int b = 1; b <= n && !found; ++b) {
      if (a == b) continue;
      for_each_proper_pin_sequence(
          pi, pi.point(a), pi.point(b), len, [&](const PinSequence& s) {
            if (found) return false;
            if (s.size() >= len) {
              found = s;
              return false;
            }
            return true;
          });
    }
  }
  return found;
}

/// Wedge subset through the wedge ledger, fed with a longest wedge
/// alternation of the host.
inline std::optional<StructureCertificate> wedge_ledger_certificate(
    const Permutation& pi, int k) {
  const PointSubset alt = longest_alternation(pi, AlternationShape::wedge);
  if (alt.size() < 4) return std::nullopt;
  auto out = try_wedge_to_structure(pi, alt, k);
  if (!out) return std::nullopt;
  if (auto* ws = std::get_if<WedgeSubset>(&out->structure))
    return StructureCertificate{*ws, k};
  return StructureCertificate{std::get<PinSequence>(out->structure), k};
}

/// A certificate of size >= 2k, or nullopt. Existence is only guaranteed
/// for long simple permutations, but any host is searched; the wedge ledger
/// phase needs a simple host and is skipped otherwise.
///
/// Phases, in order. (0) The host itself is a parallel alternation or a
/// wedge simple permutation. (1) A proper pin sequence from the
/// lexicographically least starting pair that reaches length 2k.
/// (2) A longest parallel alternation of the host. (3) The wedge ledger on a
/// longest wedge alternation, then a direct containment search for wedge
/// simple subsets.
inline std::optional<StructureCertificate> find_structure(const Permutation& pi,
                                                          int k) {
  detail::require(k >= 1, "k must be at least 1");
  const int need = 2 * k;
  if (pi.size() < need) return std::nullopt;

  const PointSubset whole = PointSubset::all(pi);
  if (auto cls = classify_alternation(pi);
      cls && cls->shape == AlternationShape::parallel)
    return StructureCertificate{ParallelAlternation{whole}, k};
  if (auto spec = is_wedge_simple(pi))
    return StructureCertificate{WedgeSubset{whole, *spec}, k};

  if (auto seq = find_proper_pin_sequence(pi, need))
    return StructureCertificate{*std::move(seq), k};

  PointSubset par = longest_alternation(pi, AlternationShape::parallel);
  if (par.size() >= need)
    return StructureCertificate{ParallelAlternation{std::move(par)}, k};

  if (is_simple(pi))
    if (auto c = wedge_ledger_certificate(pi, k); c && c->size() >= need)
      return c;
  if (auto w = find_wedge_subset(pi, need))
    return StructureCertificate{*std::move(w), k};
  return std::nullopt;
}

struct Decomposition {
  PointSubset a;
  PointSubset b;
  std::string route;               // pins | parallel | wedge | brute-force
  std::vector<std::string> trace;  // routes tried before this one

  [[nodiscard]] int overlap() const { return a.overlap(b); }
};

/// Checks the four decomposition invariants from scratch.
inline bool decomposition_valid(const Decomposition& d, int k) {
  return is_simple(d.a) && is_simple(d.b) && d.a.size() >= k &&
         d.b.size() >= k && d.overlap() <= 2 && !(d.a == d.b);
}

/// Two simple subsequences of a simple permutation, each of size >= k,
/// sharing at most two entries.
///
/// Routes in order: split a proper pin sequence of length 2k+2; split a
/// longest parallel alternation; split a wedge simple subset of length 2k
/// (needs 2k >= 8); the exhaustive oracle for n <= 12. Each result is
/// re-verified before it is returned. Non-simple hosts are accepted; the
/// routes do not rely on simplicity, only the guarantee of success does.
inline Decomposition decompose_simple(const Permutation& pi, int k) {
  detail::require(k >= 1, "k must be at least 1");
  std::vector<std::string> trace;
  auto accept = [&](PointSubset a, PointSubset b,
                    const char* route) -> std::optional<Decomposition> {
    Decomposition d{std::move(a), std::move(b), route, trace};
    if (decomposition_valid(d, k)) return d;
    trace.push_back(std::string(route) + ": split failed verification");
    return std::nullopt;
  };

  if (auto seq = find_proper_pin_sequence(pi, 2 * k + 2)) {
    try {
      auto [a, b] = split_pin_sequence(*seq, k);
      if (auto d = accept(std::move(a), std::move(b), "pins")) return *d;
    } catch (const PinBlockError& e) {
      trace.push_back(std::string("pins: ") + e.what());
    }
  } else {
    trace.push_back("pins: no proper pin sequence of length " +
                    std::to_string(2 * k + 2));
  }

  const PointSubset par = longest_alternation(pi, AlternationShape::parallel);
  if (par.size() >= split_parallel_min_length(k)) {
    auto [a, b] = split_parallel(par.pattern(), k);
    if (auto d = accept(lift_subset(par, a), lift_subset(par, b), "parallel"))
      return *d;
  } else {
    trace.push_back("parallel: longest parallel alternation has length " +
                    std::to_string(par.size()) + ", need " +
                    std::to_string(split_parallel_min_length(k)));
  }

  if (2 * k >= 8) {
    if (auto w = find_wedge_subset(pi, 2 * k)) {
      auto [a, b] = split_wedge_simple(w->points.pattern(), k);
      if (auto d = accept(lift_subset(w->points, a),
                          lift_subset(w->points, b), "wedge"))
        return *d;
    } else {
      trace.push_back("wedge: no wedge simple subset of length " +
                      std::to_string(2 * k));
    }
  } else {
    trace.push_back("wedge: splitting needs k >= 4");
  }

  if (pi.size() <= kMaxBruteForceLength) {
    if (auto w = brute_force_decompose(pi, k, 2)) {
      if (auto d = accept(w->a, w->b, "brute-force")) return *d;
    } else {
      trace.push_back("brute-force: no decomposition exists");
    }
  } else {
    trace.push_back("brute-force: host longer than 12");
  }

  std::string msg = "no decomposition found";
  for (const auto& t : trace) msg += "; " + t;
  throw Error(msg);
}

}  // namespace pinlab
