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

#include <random>
#include <set>

#include "oracles.hpp"
#include "pinlab/containment.hpp"
#include "pinlab/permutation.hpp"
#include "pinlab/symmetry.hpp"

namespace pinlab {
namespace {

TEST(ParsePermutation, CompactDigits) {
  EXPECT_EQ(parse_permutation("391867452"),
            (Permutation{3, 9, 1, 8, 6, 7, 4, 5, 2}));
}

TEST(ParsePermutation, SeparatorsAndSpacing) {
  EXPECT_EQ(parse_permutation("2 4 1 3"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse_permutation("2,4,1,3"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse_permutation(" 2 , 4,1  3 "), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse_permutation("10 1 2 3 4 5 6 7 8 9").size(), 10);
  EXPECT_TRUE(parse_permutation("").empty());
}

TEST(ParsePermutation, Errors) {
  auto message = [](const char* text) {
    try {
      parse_permutation(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("1 1 2"), "duplicate value 1");
  EXPECT_EQ(message("1 4 2"), "value 4 out of range 1..3");
  EXPECT_EQ(message("1,,2"), "empty token");
  EXPECT_NE(message("1 x 2"), "no error");
  EXPECT_NE(message("1234567891"), "no error");  // compact form needs n <= 9
}

TEST(ParsePermutation, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 14; ++n) {
    const Permutation p = oracle::random_permutation(n, rng);
    EXPECT_EQ(parse_permutation(format_permutation(p)), p);
  }
}

TEST(PatternOf, SubsequenceOfHost) {
  const Permutation host = parse_permutation("391867452");
  const auto sub = PointSubset::from_indices(host, {2, 3, 5, 6, 9});
  EXPECT_EQ(sub.pattern(), parse_permutation("51342"));
  EXPECT_EQ(pattern_of(PointSubset::all(host)), host);
  for (int i = 1; i <= host.size(); ++i)
    EXPECT_EQ(PointSubset::from_indices(host, {i}).pattern(), Permutation{1});
}

TEST(PatternOf, AgreesWithOracleAndIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Permutation host = oracle::random_permutation(n, rng);
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) idx.push_back(i);
    if (idx.empty()) continue;
    const auto sub = PointSubset::from_indices(host, idx);
    std::vector<int> raw;
    for (int i : idx) raw.push_back(host(i));
    EXPECT_EQ(oracle::values(sub.pattern()), oracle::pattern(raw));
    const Permutation p = sub.pattern();
    EXPECT_EQ(pattern_of(PointSubset::all(p)), p);
  }
}

TEST(PointSubset, RejectsForeignPoints) {
  const Permutation host{2, 4, 1, 3};
  EXPECT_THROW(PointSubset(host, std::vector<Point>{{1, 3}}), Error);
  EXPECT_THROW(PointSubset(host, std::vector<Point>{{1, 2}, {1, 2}}), Error);
}

TEST(CountCopies, Examples) {
  const Permutation pi = parse_permutation("391867452");
  const Permutation sigma = parse_permutation("51342");
  EXPECT_GE(count_copies(sigma, pi), 1u);
  const auto all = copies(sigma, pi);
  EXPECT_NE(std::find(all.begin(), all.end(), std::vector<int>{2, 3, 5, 6, 9}),
            all.end());
  EXPECT_EQ(count_copies(Permutation{1, 3, 2}, Permutation{2, 4, 1, 3}), 1u);
  EXPECT_EQ(copies(Permutation{1, 3, 2}, Permutation{2, 4, 1, 3}),
            (std::vector<std::vector<int>>{{1, 2, 4}}));
  EXPECT_EQ(count_copies(Permutation{1, 3, 2}, Permutation{1, 2, 3}), 0u);
  EXPECT_EQ(count_copies(Permutation{1, 3, 2}, Permutation{1, 3, 2}), 1u);
}

TEST(CountCopies, RejectsEmptyPattern) {
  EXPECT_THROW(count_copies(Permutation{}, Permutation{1, 2}), Error);
}

TEST(CountCopies, MatchesSubsetOracleWithLexicographicWitnesses) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& sigma : oracle::all_permutations(k))
      for (int n = 0; n <= 6; ++n)
        for (const auto& pi : oracle::all_permutations(n)) {
          const auto expect = oracle::copies(sigma, pi);
          ASSERT_EQ(copies(sigma, pi), expect) << sigma << " in " << pi;
          ASSERT_EQ(count_copies(sigma, pi), expect.size());
        }
}

TEST(CountCopies, WitnessLimit) {
  const Permutation pi = Permutation::identity(6);
  EXPECT_EQ(copies(Permutation{1, 2}, pi, 3).size(), 3u);
  EXPECT_TRUE(copies(Permutation{1, 2}, pi, 0).empty());
}

TEST(CountCopies, SingletonCountsEveryEntry) {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(count_copies(Permutation{1}, oracle::random_permutation(n, rng)),
              static_cast<std::uint64_t>(n));
}

TEST(CountCopies, Fast132AgreesExhaustively) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& pi : oracle::all_permutations(n))
      ASSERT_EQ(count_132(pi), count_copies(Permutation{1, 3, 2}, pi)) << pi;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation pi = oracle::random_permutation(20, rng);
    ASSERT_EQ(count_copies_fast(Permutation{1, 3, 2}, pi),
              count_copies(Permutation{1, 3, 2}, pi));
  }
}

TEST(CountCopies, InvariantUnderCommonSymmetry) {
  for (const Symmetry& s : Symmetry::all())
    for (int k = 1; k <= 3; ++k)
      for (const auto& sigma : oracle::all_permutations(k))
        for (int n = 1; n <= 6; ++n)
          for (const auto& pi : oracle::all_permutations(n))
            ASSERT_EQ(count_copies(apply_symmetry(sigma, s), apply_symmetry(pi, s)),
                      count_copies(sigma, pi))
                << s.name() << " " << sigma << " " << pi;
}

TEST(Containment, Transitive) {
  std::mt19937_64 rng(17);
  int chains = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Permutation a = oracle::random_permutation(1 + static_cast<int>(rng() % 3), rng);
    const Permutation b = oracle::random_permutation(3 + static_cast<int>(rng() % 3), rng);
    const Permutation c = oracle::random_permutation(6 + static_cast<int>(rng() % 3), rng);
    const bool ab = !oracle::copies(a, b).empty();
    const bool bc = !oracle::copies(b, c).empty();
    ASSERT_EQ(contains(b, a), ab);
    ASSERT_EQ(contains(c, b), bc);
    if (ab && bc) {
      ++chains;
      ASSERT_TRUE(contains(c, a)) << a << " <= " << b << " <= " << c;
    }
  }
  EXPECT_GT(chains, 100);
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(reverse(Permutation{2, 4, 1, 3}), (Permutation{3, 1, 4, 2}));
  // Inverse of 391867452 by position lookup: value v sits at position p(v).
  const Permutation pi = parse_permutation("391867452");
  std::vector<int> inv(9);
  for (int i = 1; i <= 9; ++i) inv[static_cast<std::size_t>(pi(i) - 1)] = i;
  EXPECT_EQ(oracle::values(pi.inverse()), inv);
  EXPECT_EQ(pi.inverse(), parse_permutation("3 9 1 7 8 5 6 4 2"));
  EXPECT_EQ(apply_symmetry(pi, Symmetry::inverse()), pi.inverse());
  for (int n = 0; n <= 6; ++n)
    EXPECT_EQ(complement(Permutation::identity(n)), Permutation::decreasing(n));
  EXPECT_EQ(apply_symmetry(pi, Symmetry::identity()), pi);
}

TEST(Symmetry, GroupClosureAndAction) {
  const auto all = Symmetry::all();
  const Permutation probe = parse_permutation("2 5 3 1 6 4 7");  // trivial stabiliser
  std::set<Permutation> images;
  for (const auto& s : all) images.insert(apply_symmetry(probe, s));
  EXPECT_EQ(images.size(), 8u);
  for (const auto& a : all) {
    EXPECT_EQ(apply_symmetry(apply_symmetry(probe, a), a.inverted()), probe) << a.name();
    for (const auto& b : all) {
      const Symmetry ab = compose(a, b);
      EXPECT_NE(std::find(all.begin(), all.end(), ab), all.end());
      EXPECT_EQ(apply_symmetry(probe, ab), apply_symmetry(apply_symmetry(probe, b), a))
          << a.name() << " after " << b.name();
    }
  }
}

TEST(Symmetry, PointSubsetsFollowTheirHost) {
  const Permutation host = parse_permutation("391867452");
  const auto sub = PointSubset::from_indices(host, {2, 3, 5, 6, 9});
  for (const auto& s : Symmetry::all()) {
    const auto image = apply_symmetry(sub, s);
    EXPECT_EQ(image.host(), apply_symmetry(host, s));
    EXPECT_EQ(image.pattern(), apply_symmetry(sub.pattern(), s));
  }
}

TEST(Box, SlicingAndContainment) {
  const Box b{3, 5, 2, 5};
  EXPECT_TRUE(b.contains({4, 3}));
  EXPECT_FALSE(b.contains({10, 4}));
  EXPECT_TRUE(b.sliced_by({10, 4}));
  EXPECT_TRUE(b.sliced_by({4, 9}));
  EXPECT_FALSE(b.sliced_by({1, 1}));
  EXPECT_FALSE(b.sliced_by({4, 3}));
}

}  // namespace
}  // namespace pinlab
