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

#ifndef ADTGAME_TRANSLATE_HPP_
#define ADTGAME_TRANSLATE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adtgame/adterm.hpp"
#include "adtgame/game.hpp"

namespace adtgame {

// Deterministic labels for the basic actions minted by game_to_adterm.
// Distinct (path, role, index) triples always yield distinct strings:
//   v_label(/)        = "v"        v_label(/0/1)        = "v.0.1"
//   u_leaf_label(/)   = "u"        u_leaf_label(/0/1)   = "u.0.1"
//   u_choice_label(/, 1) = "u.c1"  u_choice_label(/0, 2) = "u.0.c2"
// The "c" marker keeps a node's choice labels apart from the leaf labels of
// its descendants.
struct FreshNames {
  static std::string v_label(const NodePath& at);
  static std::string u_leaf_label(const NodePath& at);
  // k is the 1-based child position.
  static std::string u_choice_label(const NodePath& at, int k);
};

// Pairs a node of the source object with the root of its image in the
// target object. Total and injective on source nodes, ordered by source
// path.
struct CorrespondenceMap {
  std::vector<std::pair<NodePath, NodePath>> pairs;

  std::optional<NodePath> target_for(const NodePath& source) const;

  bool operator==(const CorrespondenceMap&) const = default;
};

struct TermTranslation {
  ADTerm term;
  CorrespondenceMap map;
};

struct GameTranslation {
  Game game;
  CorrespondenceMap map;
};

// Game -> term. A winning leaf for its mover becomes that player's always
// successful action; a losing leaf becomes a counter the other player always
// takes; an inner node becomes the mover's choice among countered branches.
// The result never contains a conjunction. Throws ValidationError on an
// invalid game.
TermTranslation game_to_adterm(const Game& g);

// Strategy -> assignment over exactly the owner's labels of
// game_to_adterm(g): all leaf-derived labels owned by sigma's owner are
// true, and at each owned non-leaf the chosen child's choice label is true
// while its siblings' are false. Throws StrategyError when sigma is not
// total on g.
BasicAssignment strategy_to_assignment(const Strategy& sigma, const Game& g);

// Term -> game. Throws ValidationError on an ill-typed term.
GameTranslation adterm_to_game(const ADTerm& t);

// Assignment -> strategy for adterm_to_game(t), total on the owner's nodes.
// Free choices pick the first child whose subterm the assignment already
// guarantees (falling back to the first child), the choice at a basic
// action's image follows the assigned truth value, and the choice at an
// opposing counter takes the countermeasure branch exactly when the
// assignment guarantees it. Throws EvalError when beta_s misses a label.
Strategy assignment_to_strategy(const BasicAssignment& beta_s,
                                const ADTerm& t);

}  // namespace adtgame

#endif  // ADTGAME_TRANSLATE_HPP_
