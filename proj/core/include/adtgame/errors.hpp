// Copyright 2026 The adtgame authors. All rights reserved.
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

#ifndef ADTGAME_ERRORS_HPP_
#define ADTGAME_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adtgame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. `offset` is the 0-based character
// position at which the problem was detected (only meaningful for the
// line-free DSLs; 0 otherwise).
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& message, std::size_t at)
      : Error(message + " (offset " + std::to_string(at) + ")"), offset(at) {}
};

// Evaluation over data that violates a precondition: an assignment missing a
// label, an out-of-range path, a nullary gate, and the like.
struct EvalError : Error {
  using Error::Error;
};

// A strategy that is not bound to the game it is used with: a consulted node
// has no choice, a choice is out of range, or the owner does not match.
struct StrategyError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured size guard.
struct LimitError : Error {
  using Error::Error;
};

// An exhaustive check on one instance would exceed the evaluation budget.
// The message names the serialized instance that was skipped.
struct BudgetError : Error {
  using Error::Error;
};

// Input rejected by validate/validate_game; carries the report text.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace adtgame

#endif  // ADTGAME_ERRORS_HPP_
