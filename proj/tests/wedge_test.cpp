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


#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pinlab/alternations.hpp"
#include "pinlab/wedge.hpp"

namespace pinlab {
namespace {

// Canonical wedge alternation inside the type 2 base: positions 3..2m.
PointSubset canonical_wedge(const Permutation& w) {
  std::vector<int> idx;
  for (int i = 3; i <= w.size(); ++i) idx.push_back(i);
  return PointSubset::from_indices(w, idx);
}

// A '<' wedge alternation of 2h points with `extra` random points mixed
// in, ranked into a permutation. Returns the host and the wedge indices.
std::pair<Permutation, std::vector<int>> embedded_wedge(int h, int extra,
                                                        std::mt19937_64& rng) {
  struct P {
    double x, y;
    bool wedge;
  };
  std::vector<P> pts;
  for (int j = 0; j < h; ++j) {
    pts.push_back({2.0 * j + 1, double(h - j), true});
    pts.push_back({2.0 * j + 2, double(h + 1 + j), true});
  }
  std::uniform_real_distribution<double> u(0, 2 * h + 1);
  for (int e = 0; e < extra; ++e) pts.push_back({u(rng), u(rng), false});
  std::sort(pts.begin(), pts.end(),
            [](const P& a, const P& b) { return a.x < b.x; });
  std::vector<int> by_y(pts.size());
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_y.begin(), by_y.end(),
            [&](int a, int b) { return pts[static_cast<std::size_t>(a)].y <
                                       pts[static_cast<std::size_t>(b)].y; });
  std::vector<int> vals(pts.size());
  for (std::size_t r = 0; r < by_y.size(); ++r)
    vals[static_cast<std::size_t>(by_y[r])] = static_cast<int>(r) + 1;
  std::vector<int> idx;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].wedge) idx.push_back(static_cast<int>(i) + 1);
  return {Permutation(vals), idx};
}

bool is_proper_sequence(const Permutation& host, const PinSequence& s) {
  return s.host() == host && is_proper(s);
}

TEST(GenerateWedge, Examples) {
  EXPECT_EQ(generate_wedge_simple({WedgeType::type2, 6}),
            (Permutation{6, 12, 5, 7, 4, 8, 3, 9, 2, 10, 1, 11}));
  EXPECT_EQ(generate_wedge_simple({WedgeType::type1, 6}),
            (Permutation{7, 5, 8, 4, 9, 3, 10, 2, 11, 1, 12, 6}));
  EXPECT_EQ(generate_wedge_simple({WedgeType::type2, 3}),
            (Permutation{3, 6, 2, 4, 1, 5}));
  EXPECT_EQ(generate_wedge_simple({WedgeType::type2, 2}),
            (Permutation{2, 4, 1, 3}));
  EXPECT_THROW(generate_wedge_simple({WedgeType::type1, 2}), Error);
  EXPECT_THROW(generate_wedge_simple({WedgeType::type2, 1}), Error);
}

TEST(GenerateWedge, FamiliesAreSimple) {
  for (int len = 4; len <= 24; len += 2)
    for (WedgeType t : {WedgeType::type1, WedgeType::type2}) {
      if (len < min_wedge_length(t)) continue;
      for (const auto& s : Symmetry::all()) {
        const auto w = generate_wedge_simple({t, len / 2, s});
        ASSERT_TRUE(oracle::simple(w)) << w;
      }
    }
}

TEST(GenerateWedge, WedgePointsFormAWedgeAlternation) {
  for (int m = 3; m <= 12; ++m) {
    const auto w = generate_wedge_simple({WedgeType::type2, m});
    const auto c = classify_alternation(canonical_wedge(w).pattern());
    ASSERT_TRUE(c);
    EXPECT_EQ(c->shape, AlternationShape::wedge);
    // Type 1 loses its tip pair.
    const auto w1 = generate_wedge_simple({WedgeType::type1, m});
    std::vector<int> idx;
    for (int i = 1; i <= 2 * m - 2; ++i) idx.push_back(i);
    const auto c1 =
        classify_alternation(PointSubset::from_indices(w1, idx).pattern());
    ASSERT_TRUE(c1);
    EXPECT_EQ(c1->shape, AlternationShape::wedge);
  }
}

TEST(IsWedgeSimple, Examples) {
  auto a = is_wedge_simple(Permutation{6, 12, 5, 7, 4, 8, 3, 9, 2, 10, 1, 11});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->type, WedgeType::type2);
  EXPECT_EQ(a->m, 6);
  auto b = is_wedge_simple(Permutation{2, 4, 1, 3});
  ASSERT_TRUE(b);
  EXPECT_EQ(b->type, WedgeType::type2);
  EXPECT_EQ(b->m, 2);
  EXPECT_FALSE(is_wedge_simple(Permutation{1, 2, 3, 4}));
  EXPECT_FALSE(is_wedge_simple(Permutation{2, 5, 3, 1, 4}));
}

TEST(IsWedgeSimple, RecognizesEveryOrientation) {
  for (int m = 3; m <= 10; ++m)
    for (WedgeType t : {WedgeType::type1, WedgeType::type2})
      for (const auto& s : Symmetry::all()) {
        const auto w = generate_wedge_simple({t, m, s});
        const auto spec = is_wedge_simple(w);
        ASSERT_TRUE(spec);
        EXPECT_EQ(spec->type, t);
        EXPECT_EQ(spec->m, m);
        EXPECT_EQ(generate_wedge_simple(*spec), w);
      }
}

TEST(IsWedgeSimple, OnlyFamilyMembersAmongSimples) {
  // Per length, the recognized simples are exactly the distinct
  // orientations of the family members.
  for (int n = 4; n <= 8; n += 2) {
    std::set<std::vector<int>> family;
    for (WedgeType t : {WedgeType::type1, WedgeType::type2}) {
      if (n < min_wedge_length(t)) continue;
      for (const auto& s : Symmetry::all())
        family.insert(oracle::values(generate_wedge_simple({t, n / 2, s})));
    }
    int recognized = 0;
    for (const auto& p : oracle::simple_permutations(n))
      if (is_wedge_simple(p)) {
        ++recognized;
        EXPECT_TRUE(family.count(oracle::values(p))) << p;
      }
    EXPECT_EQ(recognized, static_cast<int>(family.size()));
  }
}

TEST(SplitWedge, Type2Example) {
  const auto w = generate_wedge_simple({WedgeType::type2, 6});
  const auto [a, b] = split_wedge_simple(w, 6);
  EXPECT_EQ(a.indices(), (std::vector<int>{1, 2, 3, 4, 9, 10}));
  EXPECT_EQ(b.indices(), (std::vector<int>{1, 2, 5, 6, 7, 8}));
  EXPECT_EQ(a.pattern(), (Permutation{3, 6, 2, 4, 1, 5}));
  EXPECT_EQ(b.pattern(), (Permutation{3, 6, 2, 4, 1, 5}));
  EXPECT_EQ(a.overlap(b), 2);
}

TEST(SplitWedge, Type1Example) {
  const auto w = generate_wedge_simple({WedgeType::type1, 6});
  const auto [a, b] = split_wedge_simple(w, 6);
  EXPECT_EQ(a.indices(), (std::vector<int>{1, 2, 3, 4, 11, 12}));
  EXPECT_EQ(b.indices(), (std::vector<int>{5, 6, 7, 8, 9, 12}));
  EXPECT_EQ(a.pattern(), (Permutation{4, 2, 5, 1, 6, 3}));
  EXPECT_EQ(b.pattern(), (Permutation{4, 2, 5, 1, 6, 3}));
  EXPECT_EQ(a.overlap(b), 1);
}

TEST(SplitWedge, Errors) {
  EXPECT_THROW(split_wedge_simple(Permutation{1, 2, 3, 4, 5, 6, 7, 8}, 4),
               Error);
  const auto w = generate_wedge_simple({WedgeType::type2, 6});
  EXPECT_THROW(split_wedge_simple(w, 3), Error);
  EXPECT_THROW(split_wedge_simple(w, 7), Error);
}

TEST(SplitWedge, ContractsOnAllGeneratedInstances) {
  int checked = 0;
  for (int len = 8; len <= 24; len += 2)
    for (WedgeType t : {WedgeType::type1, WedgeType::type2})
      for (const auto& s : Symmetry::all())
        for (int k = 4; 2 * k <= len; ++k) {
          const auto w = generate_wedge_simple({t, len / 2, s});
          const auto [a, b] = split_wedge_simple(w, k);
          ASSERT_GE(a.size(), k);
          ASSERT_GE(b.size(), k);
          ASSERT_LE(a.overlap(b), t == WedgeType::type1 ? 1 : 2);
          ASSERT_TRUE(oracle::simple(a.pattern())) << w << " k=" << k;
          ASSERT_TRUE(oracle::simple(b.pattern())) << w << " k=" << k;
          ++checked;
        }
  EXPECT_EQ(checked, 16 * 45);
}

TEST(WedgeLedger, TypeTwoLengthEighteen) {
  const auto w = generate_wedge_simple({WedgeType::type2, 9});
  const auto wedge = canonical_wedge(w);
  ASSERT_EQ(wedge.size(), 16);
  const auto out = wedge_to_structure(w, wedge, 2);
  EXPECT_EQ(out.ledger.contribution_total(), 16);
  EXPECT_EQ(out.ledger.entries.back().wedge_sum, 16);
  ASSERT_TRUE(std::holds_alternative<WedgeSubset>(out.structure));
  const auto& ws = std::get<WedgeSubset>(out.structure);
  EXPECT_EQ(ws.points.host(), w);
  EXPECT_EQ(ws.points.size(), 16);
  EXPECT_EQ(ws.spec.type, WedgeType::type2);
  EXPECT_TRUE(is_wedge_simple(ws.points.pattern()));
  EXPECT_THROW(wedge_to_structure(w, wedge, 3), Error);  // needs 36 points
}

TEST(WedgeLedger, NegativeContribution) {
  const Permutation host{9,  11, 8, 13, 7, 15, 6,  16, 5, 17,
                         14, 4,  18, 1, 3, 10, 19, 2,  20, 12};
  ASSERT_TRUE(oracle::simple(host));
  const std::vector<int> idx{1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                             12, 13, 15, 17, 18, 19};
  const auto wedge = PointSubset::from_indices(host, idx);
  ASSERT_EQ(classify_alternation(wedge.pattern())->shape,
            AlternationShape::wedge);
  const auto out = wedge_to_structure(host, wedge, 2);
  const auto& e = out.ledger.entries;
  ASSERT_GE(e.size(), 4u);
  EXPECT_EQ(e[3].wedge_contribution, -1);
  EXPECT_EQ(out.ledger.contribution_total(), 16);
}

TEST(WedgeLedger, PropertiesOnEmbeddedWedges) {
  std::mt19937_64 rng(5);
  int runs = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto [base, idx] =
        embedded_wedge(8, 1 + static_cast<int>(rng() % 6), rng);
    if (!oracle::simple(base)) continue;
    // Random orientation, so normalization is exercised too.
    const Symmetry s = Symmetry::all()[rng() % 8];
    const Permutation host = apply_symmetry(base, s);
    const PointSubset wedge =
        apply_symmetry(PointSubset::from_indices(base, idx), s);
    const auto out = wedge_to_structure(host, wedge, 2);
    ++runs;

    const auto& ledger = out.ledger;
    ASSERT_EQ(ledger.contribution_total(), ledger.wedge_points);  // W1
    ASSERT_EQ(ledger.entries.back().wedge_sum, ledger.wedge_points);

    const PointSubset norm = apply_symmetry(wedge, out.normalization);
    std::vector<int> vals;
    for (const auto& p : norm.points()) vals.push_back(p.value);
    std::sort(vals.begin(), vals.end());
    const int center = vals[vals.size() / 2 - 1];
    for (const auto& e : ledger.entries) {
      if (e.direction == Direction::left)  // W3
        ASSERT_LE(e.wedge_contribution, 0) << host;
      if (e.direction == Direction::up) {  // W4
        Point right_most{0, 0};
        for (const auto& p : norm.points())
          if (e.region.contains(p) && p.index > right_most.index)
            right_most = p;
        ASSERT_GT(right_most.value, center) << host << " pin " << e.pin;
      }
    }

    if (const auto* ws = std::get_if<WedgeSubset>(&out.structure)) {
      ASSERT_GE(ws->points.size(), 4);
      ASSERT_EQ(ws->points.host(), host);
      ASSERT_TRUE(is_wedge_simple(ws->points.pattern()));
    } else {
      const auto& seq = std::get<PinSequence>(out.structure);
      ASSERT_GE(seq.size(), 4);
      ASSERT_TRUE(is_proper_sequence(host, seq));
    }
  }
  EXPECT_GT(runs, 100);
}

TEST(WedgeLedger, Preconditions) {
  const auto w = generate_wedge_simple({WedgeType::type2, 9});
  const auto wedge = canonical_wedge(w);
  const Permutation other{2, 4, 1, 3};
  EXPECT_THROW(wedge_to_structure(other, wedge, 2), Error);
  std::vector<int> all;
  for (int i = 1; i <= 18; ++i) all.push_back(i);
  // The whole type 2 permutation is not a wedge alternation.
  EXPECT_THROW(
      try_wedge_to_structure(w, PointSubset::from_indices(w, all), 1), Error);
}

TEST(FindWedgeSubset, LongestContainedMember) {
  const auto w = generate_wedge_simple({WedgeType::type1, 7});
  auto hit = find_wedge_subset(w, 4);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->points.size(), 14);
  EXPECT_FALSE(find_wedge_subset(Permutation{1, 2, 3, 4, 5, 6}, 4));
  const Permutation host{5, 11, 7, 4, 1, 8, 10, 3, 12, 2, 6, 9};
  if (auto sub = find_wedge_subset(host, 4)) {
    EXPECT_TRUE(is_wedge_simple(sub->points.pattern()));
    EXPECT_EQ(generate_wedge_simple(sub->spec), sub->points.pattern());
  }
}

}  // namespace
}  // namespace pinlab
