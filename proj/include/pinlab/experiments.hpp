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


/// @file experiments.hpp
/// @brief Exhaustive experiments over simple permutations: the least length
/// from which every simple permutation decomposes, and the fewest copies of
/// a pattern in a simple permutation of given length.

#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pinlab/brute_force.hpp"
#include "pinlab/containment.hpp"
#include "pinlab/enumerate.hpp"
#include "pinlab/error.hpp"
#include "pinlab/parallel.hpp"
#include "pinlab/permutation.hpp"

namespace pinlab {

enum class RowStatus { pass, fail, vacuous };

inline const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::vacuous: return "vacuous";
  }
  return "?";
}

struct ExperimentRow {
  int n = 0;
  std::uint64_t simple_count = 0;
  RowStatus status = RowStatus::vacuous;
  std::optional<Permutation> counterexample;  // lexicographically first
};

struct ExperimentReport {
  std::string name;
  int parameter = 0;  // k or r
  std::vector<ExperimentRow> rows;
  std::optional<int> extremal;  // least n with every n' in [n, n_max] passing
  double seconds = 0;

  /// key: value lines; the elapsed time only when asked for.
  [[nodiscard]] std::string text(bool with_time = false) const {
    std::ostringstream os;
    os << "experiment: " << name << "\n";
    os << "parameter: " << parameter << "\n";
    for (const auto& r : rows) {
      os << "n=" << r.n << ": " << status_name(r.status)
         << " (simple: " << r.simple_count << ")";
      if (r.counterexample) os << " counterexample: " << *r.counterexample;
      os << "\n";
    }
    os << "extremal: "
       << (extremal ? std::to_string(*extremal) : "not determined within range")
       << "\n";
    if (with_time) os << "seconds: " << seconds << "\n";
    return os.str();
  }
};

namespace detail {

/// Per first entry: number of simple permutations and the first one that
/// fails `ok`.
struct BlockScan {
  std::uint64_t count = 0;
  std::optional<Permutation> first_failure;
};

template <class Pred>
std::vector<BlockScan> scan_simple_blocks(int n, Pred ok) {
  return parallel_blocks(n, [&](int b) {
    BlockScan scan;
    detail::simple_with_first(n, b + 1, [&](const std::vector<int>& v) {
      ++scan.count;
      if (!scan.first_failure) {
        Permutation pi(v);
        if (!ok(pi)) scan.first_failure = std::move(pi);
      }
    });
    return scan;
  });
}

template <class Pred>
ExperimentReport all_simple_experiment(std::string name, int parameter,
                                       int n_max, Pred ok) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.name = std::move(name);
  rep.parameter = parameter;
  for (int n = 1; n <= n_max; ++n) {
    ExperimentRow row;
    row.n = n;
    for (auto& blk : scan_simple_blocks(n, ok)) {
      row.simple_count += blk.count;
      if (!row.counterexample && blk.first_failure)
        row.counterexample = std::move(blk.first_failure);
    }
    row.status = row.simple_count == 0 ? RowStatus::vacuous
                 : row.counterexample  ? RowStatus::fail
                                       : RowStatus::pass;
    rep.rows.push_back(std::move(row));
  }
  for (int i = n_max; i >= 1; --i) {
    if (rep.rows[static_cast<std::size_t>(i - 1)].status == RowStatus::fail) break;
    rep.extremal = i;
  }
  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace detail

inline constexpr int kMaxExperimentLength = 11;

/// For each n <= n_max, whether every simple permutation of length n has
/// two distinct simple subsequences of size >= k sharing at most two
/// entries. Lengths without simple permutations pass vacuously.
inline ExperimentReport empirical_f(int k, int n_max) {
  detail::require(k >= 2, "k must be at least 2");
  detail::require(n_max >= 1 && n_max <= kMaxExperimentLength,
                  "n_max must be in 1..11");
  return detail::all_simple_experiment(
      "decomposition", k, n_max, [k](const Permutation& pi) {
        return brute_force_decompose(pi, k, 2).has_value();
      });
}

/// For each n <= n_max, whether every simple permutation of length n has
/// more than r copies of 132.
inline ExperimentReport empirical_g(int r, int n_max) {
  detail::require(r >= 0, "r must be nonnegative");
  detail::require(n_max >= 1 && n_max <= 10, "n_max must be in 1..10");
  return detail::all_simple_experiment(
      "more-than-r-132", r, n_max, [r](const Permutation& pi) {
        return count_132(pi) > static_cast<std::uint64_t>(r);
      });
}

/// Fewest copies of sigma over all simple permutations of length n.
inline std::uint64_t min_copies_in_simples(const Permutation& sigma, int n) {
  detail::require(n >= 1 && n <= 10, "n must be in 1..10");
  detail::require(sigma.size() >= 1, "pattern must be nonempty");
  auto mins = parallel_blocks(n, [&](int b) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    detail::simple_with_first(n, b + 1, [&](const std::vector<int>& v) {
      if (best == 0) return;
      best = std::min(best, count_copies_fast(sigma, Permutation(v)));
    });
    return best;
  });
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (auto m : mins) best = std::min(best, m);
  detail::require(best != std::numeric_limits<std::uint64_t>::max(),
                  "no simple permutation of length " + std::to_string(n));
  return best;
}

}  // namespace pinlab
