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


/// @file series.hpp
/// @brief Truncated power series over exact rationals, and the generating
/// functions of permutations with at most r copies of 132 for r = 0, 1.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pinlab/error.hpp"

namespace pinlab {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficients a_0..a_N of a power series; every operation truncates at
/// the order of its inputs (the smaller one for binary operations).
class FormalSeries {
 public:
  explicit FormalSeries(int order) : c_(static_cast<std::size_t>(order + 1)) {
    detail::require(order >= 0, "series order must be nonnegative");
  }
  FormalSeries(int order, std::vector<Rational> coeffs) : FormalSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
      c_[i] = coeffs[i];
  }

  static FormalSeries constant(int order, Rational v) {
    FormalSeries s(order);
    s.c_[0] = std::move(v);
    return s;
  }
  /// c * x^power.
  static FormalSeries monomial(int order, int power, Rational c = 1) {
    FormalSeries s(order);
    if (power <= order) s.c_[static_cast<std::size_t>(power)] = std::move(c);
    return s;
  }

  [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int i) const {
    return c_[static_cast<std::size_t>(i)];
  }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }

  [[nodiscard]] FormalSeries truncated(int order) const {
    FormalSeries s(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) s[i] = (*this)[i];
    return s;
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
    return s;
  }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i)
      for (int j = 0; j <= i; ++j) s[i] += a[j] * b[i - j];
    return s;
  }
  friend FormalSeries operator*(const Rational& r, const FormalSeries& a) {
    FormalSeries s = a;
    for (auto& v : s.c_) v *= r;
    return s;
  }
  friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) {
    detail::require(b[0] != 0, "series division needs a nonzero constant term");
    FormalSeries q(std::min(a.order(), b.order()));
    for (int i = 0; i <= q.order(); ++i) {
      Rational acc = a[i];
      for (int j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
      q[i] = acc / b[0];
    }
    return q;
  }
  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

  /// f / x, for f with zero constant term. The order drops by one.
  [[nodiscard]] FormalSeries divided_by_x() const {
    detail::require(c_[0] == 0, "division by x needs a zero constant term");
    detail::require(order() >= 1, "series too short to divide by x");
    FormalSeries s(order() - 1);
    for (int i = 0; i <= s.order(); ++i) s[i] = (*this)[i + 1];
    return s;
  }

  /// Square root with the given constant term's positive rational root,
  /// solved coefficient by coefficient from s * s = f.
  [[nodiscard]] FormalSeries sqrt() const {
    auto root = rational_sqrt(c_[0]);
    detail::require(root.has_value() && *root != 0,
                    "series sqrt needs a nonzero rational square constant term");
    FormalSeries s(order());
    s[0] = *root;
    for (int i = 1; i <= order(); ++i) {
      Rational acc = (*this)[i];
      for (int j = 1; j < i; ++j) acc -= s[j] * s[i - j];
      s[i] = acc / (2 * s[0]);
    }
    return s;
  }

  [[nodiscard]] bool integral() const {
    for (const auto& v : c_)
      if (boost::multiprecision::denominator(v) != 1) return false;
    return true;
  }

  /// Coefficients as integers; throws if any is not an integer.
  [[nodiscard]] std::vector<boost::multiprecision::cpp_int> integers() const {
    std::vector<boost::multiprecision::cpp_int> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      detail::require(boost::multiprecision::denominator(c_[i]) == 1,
                      "coefficient " + std::to_string(i) + " is not an integer");
      out.push_back(boost::multiprecision::numerator(c_[i]));
    }
    return out;
  }

  static std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    using boost::multiprecision::cpp_int;
    const cpp_int num = boost::multiprecision::numerator(q);
    const cpp_int den = boost::multiprecision::denominator(q);
    const cpp_int rn = boost::multiprecision::sqrt(num);
    const cpp_int rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
  }

 private:
  std::vector<Rational> c_;
};

/// sqrt(1 - 4x) to order N from the term ratio a_{n+1} / a_n = (4n-2)/(n+1).
inline FormalSeries sqrt_one_minus_4x(int order) {
  FormalSeries s(order);
  s[0] = 1;
  for (int n = 0; n < order; ++n) s[n + 1] = s[n] * Rational(4 * n - 2, n + 1);
  return s;
}

/// Catalan series to order N from the fixed point C = 1 + x C^2. Each pass
/// fixes one more coefficient.
inline FormalSeries catalan_series(int order) {
  FormalSeries c = FormalSeries::constant(order, 1);
  const FormalSeries one = FormalSeries::constant(order, 1);
  const FormalSeries x = FormalSeries::monomial(order, 1);
  for (int pass = 0; pass <= order; ++pass) c = one + x * c * c;
  return c;
}

/// (1 - S) / (2x) + 8x^3 / (S (1 + S)^3) with S = sqrt(1 - 4x), to order N.
inline FormalSeries at_most_one_132_series(int order) {
  const FormalSeries s = sqrt_one_minus_4x(order + 1);
  const FormalSeries one = FormalSeries::constant(order + 1, 1);
  const FormalSeries first = Rational(1, 2) * (one - s).divided_by_x();
  const FormalSeries sn = s.truncated(order);
  const FormalSeries onep = one.truncated(order) + sn;
  const FormalSeries second =
      FormalSeries::monomial(order, 3, 8) / (sn * onep * onep * onep);
  return first + second;
}

/// Generating function of permutations with at most r copies of 132, for
/// r in {0, 1}, to order N. Coefficients are checked to be integers.
inline FormalSeries series_at_most_r_132(int r, int order) {
  detail::require(r == 0 || r == 1, "only r = 0 and r = 1 are available");
  detail::require(order >= 0, "order must be nonnegative");
  FormalSeries f = r == 0 ? catalan_series(order) : at_most_one_132_series(order);
  (void)f.integers();
  return f;
}

}  // namespace pinlab
