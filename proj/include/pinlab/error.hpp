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

#pragma once

#include <stdexcept>
#include <string>

namespace pinlab {

/// Domain error: a precondition of a combinatorial operation does not hold
/// (host not simple, sequence too short, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad permutation or point list).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Raised instead of silently recovering when a
/// construction that is guaranteed to succeed does not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace pinlab
