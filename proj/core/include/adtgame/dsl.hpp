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

#ifndef ADTGAME_DSL_HPP_
#define ADTGAME_DSL_HPP_

#include <optional>
#include <string>

#include "adtgame/adterm.hpp"
#include "adtgame/game.hpp"

namespace adtgame {

// Term grammar (whitespace insignificant):
//   term  := basic | gate
//   basic := IDENT (':' ('p'|'o'))?
//   gate  := ('or'|'and') '_' ('p'|'o') '(' term (',' term)* ')'
//          | 'c' '_' ('p'|'o') '(' term ',' term ')'
//   IDENT := [A-Za-z][A-Za-z0-9_.]*
// Unannotated leaf owners are inferred from the enclosing gate; a bare
// unannotated root leaf is a parse error. Explicit annotations are taken
// literally even when they clash with the context, leaving the clash for
// validate to report.
ADTerm parse_adterm(const std::string& text);

// Canonical form: one space after each comma, no other decoration, leaf
// annotations only where the owner cannot be inferred (so always at a root
// leaf). parse_adterm(print_adterm(t)) == t for every t.
std::string print_adterm(const ADTerm& t);

// Game grammar (whitespace insignificant):
//   game := 'L' ('p'|'o') '(' ('1,0'|'0,1') ')'
//         | 'N' ('p'|'o') '(' game (',' game)* ')'
Game parse_game(const std::string& text);

// Canonical form: "Np(No(Lp(0,1), Lp(1,0)), Lo(0,1))"; outcomes print
// exactly "(1,0)" / "(0,1)".
std::string print_game(const Game& g);

Outcome parse_outcome(const std::string& text);

// Assignment files: one "[p]" and/or one "[o]" section of
// "label = true|false" lines; '#' starts a comment. A file may carry one
// player's assignment or a full profile.
struct AssignmentFile {
  std::optional<BasicAssignment> proponent;
  std::optional<BasicAssignment> opponent;

  // Missing sections count as empty assignments.
  BasicAssignmentProfile to_profile() const;

  // The section for s; throws EvalError when absent.
  const BasicAssignment& only(Player s) const;

  // The single present section; throws EvalError unless exactly one is.
  const BasicAssignment& single() const;
};

AssignmentFile parse_assignment(const std::string& text);
std::string print_assignment(const BasicAssignment& beta);
std::string print_assignment_profile(const BasicAssignmentProfile& beta);

// Strategy files: one "<path> -> <index>" line per owned non-leaf, with "/"
// for the root path; '#' starts a comment. The owner is not written down,
// so binding to a game recovers it (or takes it explicitly); parsing
// validates totality and arity against the game.
Strategy parse_strategy(const std::string& text, const Game& g);
Strategy parse_strategy(const std::string& text, const Game& g, Player owner);
std::string print_strategy(const Strategy& sigma);

}  // namespace adtgame

#endif  // ADTGAME_DSL_HPP_
