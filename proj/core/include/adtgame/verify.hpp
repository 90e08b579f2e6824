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

#ifndef ADTGAME_VERIFY_HPP_
#define ADTGAME_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adtgame/adterm.hpp"
#include "adtgame/game.hpp"

namespace adtgame {

// Bounds for the seeded random generators. Instances whose exhaustive
// enumeration for the check at hand would exceed `budget` evaluations are
// rejected and redrawn, so every check stays exhaustive yet bounded.
// max_internal_nodes == 0 means no extra cap.
struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 3;
  int max_arity = 3;
  int max_basic_actions = 6;  // per player
  int instance_count = 100;
  std::uint64_t budget = std::uint64_t{1} << 20;
  int max_internal_nodes = 0;
};

// Same config, same instance. All four term constructors are reachable and
// every minted label is unique within its player.
Game gen_game(const GenConfig& cfg);
ADTerm gen_adterm(const GenConfig& cfg);

struct CheckCounterexample {
  std::string instance;  // canonical text of the (shrunk) failing instance
  std::string detail;    // the inner point and both sides of the equivalence

  bool operator==(const CheckCounterexample&) const = default;
};

struct CheckReport {
  std::string check_name;
  GenConfig config;
  int instances_tried = 0;
  std::optional<CheckCounterexample> counterexample;
  std::optional<std::string> witness;
  double elapsed_seconds = 0.0;
};

// Names accepted by check(), in documentation order:
//   partition         every profile makes exactly one player successful
//   thm2              profile outcome == profile success of the translation
//   thm3              one-sided outcome == one-sided success (game side)
//   cor1              optimal outcome == satisfiability (game side)
//   thm4              one-sided success == one-sided outcome (term side)
//   cor2              satisfiability == optimal outcome (term side)
//   conjunction-free  translated games never contain a conjunction
//   round-trip        satisfiability survives term -> game -> term
//   determinacy       exactly one player has a winning strategy
//   locality          sat ignores labels that do not occur in the term
//   non-surjectivity  an assignment outside the image of the strategy
//                     translation, exhibited as the report's witness
const std::vector<std::string>& check_names();

// Runs one named check over instance_count generated instances with
// exhaustive inner quantification. Deterministic: identical (name, cfg)
// yield identical reports up to elapsed time. Throws EvalError on an
// unknown name.
CheckReport check(const std::string& name, const GenConfig& cfg);

// Single-instance runners behind check(). They throw BudgetError (naming
// the instance) when the exhaustive enumeration would exceed budget, and
// EvalError when the name does not apply to the instance kind.
std::optional<CheckCounterexample> check_game_instance(const std::string& name,
                                                       const Game& g,
                                                       std::uint64_t budget);
std::optional<CheckCounterexample> check_adterm_instance(
    const std::string& name, const ADTerm& t, std::uint64_t budget);

// Greedy counterexample shrinking: drop children of wide nodes while the
// instance still fails, then (for terms) merge same-owner labels.
Game shrink_game(const Game& g,
                 const std::function<bool(const Game&)>& still_fails);
ADTerm shrink_adterm(const ADTerm& t,
                     const std::function<bool(const ADTerm&)>& still_fails);

}  // namespace adtgame

#endif  // ADTGAME_VERIFY_HPP_
