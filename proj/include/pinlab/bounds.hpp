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


/// @file bounds.hpp
/// @brief Exact evaluation of the two length thresholds that force a
/// structure certificate, 2 * B^(B^(2k)) with B = 8k^4 (pin sequence or
/// alternation) and B = 2048k^8 (pin sequence, parallel alternation or
/// wedge).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <string>

#include "pinlab/error.hpp"

namespace pinlab {

using BigInt = boost::multiprecision::cpp_int;

/// Plain values above this many bits are kept symbolic.
inline constexpr unsigned long kPlainBoundBits = 1u << 16;

/// The number 2 * base^exponent.
struct TowerBound {
  BigInt base;
  BigInt exponent;
  std::optional<BigInt> value;            // when at most kPlainBoundBits
  std::optional<BigInt> power_of_two;     // e with value = 2^e, if base = 2^b

  /// log2(log2(value)), usable for ordering bounds of any size.
  [[nodiscard]] double log2_log2() const {
    const double lb = std::log2(base.convert_to<double>());
    const unsigned msb = boost::multiprecision::msb(exponent);
    const double lead =
        (exponent >> (msb > 52 ? msb - 52 : 0)).convert_to<double>();
    const double le = std::log2(lead) + (msb > 52 ? msb - 52 : 0);
    // value = 2^(1 + exponent * lb); the +1 only matters when tiny.
    if (le < 1000) return std::log2(1.0 + std::exp2(le) * lb);
    return le + std::log2(lb);
  }

  /// "2^e" when a power of two, else "2*B^E".
  [[nodiscard]] std::string symbolic() const {
    if (power_of_two) return "2^" + power_of_two->str();
    return "2*" + base.str() + "^" + exponent.str();
  }
};

inline bool operator<(const TowerBound& a, const TowerBound& b) {
  if (a.value && b.value) return *a.value < *b.value;
  if (a.power_of_two && b.power_of_two) return *a.power_of_two < *b.power_of_two;
  return a.log2_log2() < b.log2_log2();
}

namespace detail {

inline TowerBound tower(const BigInt& base, int k) {
  TowerBound t;
  t.base = base;
  t.exponent = boost::multiprecision::pow(base, static_cast<unsigned>(2 * k));
  if ((base & (base - 1)) == 0) {
    const unsigned b = boost::multiprecision::msb(base);
    t.power_of_two = 1 + BigInt(b) * t.exponent;
  }
  const unsigned base_bits = boost::multiprecision::msb(base) + 1;
  if (t.exponent <= kPlainBoundBits / base_bits)
    t.value = 2 * boost::multiprecision::pow(
                      base, t.exponent.convert_to<unsigned>());
  return t;
}

}  // namespace detail

struct StructureBounds {
  TowerBound pin_or_alternation;  // B = 8k^4
  TowerBound structure;           // B = 2048k^8
};

inline StructureBounds structure_bounds(int k) {
  detail::require(k >= 1 && k <= 1000, "k must be in 1..1000");
  const BigInt kk = k;
  return {detail::tower(8 * kk * kk * kk * kk, k),
          detail::tower(2048 * boost::multiprecision::pow(kk, 8), k)};
}

}  // namespace pinlab
