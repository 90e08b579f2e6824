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

#ifndef ADTGAME_GAME_HPP_
#define ADTGAME_GAME_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adtgame/adterm.hpp"
#include "adtgame/errors.hpp"
#include "adtgame/path.hpp"
#include "adtgame/player.hpp"

namespace adtgame {

// Binary outcomes of a finished play, written "(1,0)" when the proponent
// wins and "(0,1)" when the opponent does. Each player orders outcomes with
// their own win on top.
enum class Outcome : std::uint8_t {
  ProponentWins = 0,
  OpponentWins = 1,
};

constexpr Player outcome_winner(Outcome v) {
  return v == Outcome::ProponentWins ? Player::Proponent : Player::Opponent;
}

constexpr Outcome win_for(Player s) {
  return s == Player::Proponent ? Outcome::ProponentWins
                                : Outcome::OpponentWins;
}

// a is at most b from the point of view of `by`.
constexpr bool outcome_leq(Outcome a, Outcome b, Player by) {
  const int ra = outcome_winner(a) == by ? 1 : 0;
  const int rb = outcome_winner(b) == by ? 1 : 0;
  return ra <= rb;
}

constexpr Outcome outcome_max(Outcome a, Outcome b, Player by) {
  return outcome_leq(a, b, by) ? b : a;
}

std::string outcome_text(Outcome v);

enum class GameKind : std::uint8_t {
  Leaf,     // the play is over with a fixed outcome
  NonLeaf,  // the mover picks one child to continue in
};

// A two-player zero-sum game tree with strictly alternating movers. Leaves
// also carry a player tag so alternation is meaningful all the way down.
// Like ADTerm, construction is permissive and validate_game reports
// violations by path.
class Game {
 public:
  static Game leaf(Player mover, Outcome outcome);
  static Game nonleaf(Player mover, std::vector<Game> children);

  GameKind kind() const { return node_->kind; }
  Player mover() const { return node_->mover; }

  // Only meaningful for GameKind::Leaf.
  Outcome outcome() const { return node_->outcome; }

  std::span<const Game> children() const { return node_->children; }

  bool operator==(const Game& other) const;
  bool operator!=(const Game& other) const { return !(*this == other); }

  std::size_t node_count() const;
  std::size_t internal_node_count() const;

 private:
  struct Node {
    GameKind kind;
    Player mover;
    Outcome outcome;
    std::vector<Game> children;
  };

  explicit Game(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Player first_player(const Game& g) { return g.mover(); }

// Checks alternation (each child's player is the opposite of its parent's)
// and that every non-leaf has at least one child.
ValidationReport validate_game(const Game& g);

// Resolves a path inside a game. Throws EvalError on a dangling path.
const Game& subgame_at(const Game& g, const NodePath& path);

// Paths of the non-leaf nodes moved by s (or by anyone), in preorder.
std::vector<NodePath> nonleaf_paths(const Game& g, Player s);
std::vector<NodePath> nonleaf_paths(const Game& g);

// One player's full plan: a chosen child index for every non-leaf node that
// player moves at, keyed by path. Strategies are total, including nodes that
// their own earlier choices make unreachable.
struct Strategy {
  Player owner = Player::Proponent;
  std::map<NodePath, int> choices;

  bool operator==(const Strategy&) const = default;
};

struct StrategyProfile {
  Strategy for_proponent;
  Strategy for_opponent;

  StrategyProfile();
  StrategyProfile(Strategy p, Strategy o);

  const Strategy& for_player(Player s) const {
    return s == Player::Proponent ? for_proponent : for_opponent;
  }

  bool operator==(const StrategyProfile&) const = default;
};

// Totality check: the strategy's domain is exactly the owner's non-leaf
// nodes of g and every choice is within arity.
ValidationReport validate_strategy(const Game& g, const Strategy& sigma);

// Outcome when both players follow their strategies from the root. Only the
// visited nodes are consulted. Throws StrategyError on a missing or
// out-of-range consulted choice.
Outcome out_profile(const Game& g, const StrategyProfile& sigma);

// Outcome when the owner follows sigma_s and the other player plays the
// move that is best for themselves at each of their nodes.
Outcome out_strategy(const Game& g, const Strategy& sigma_s);

// Outcome under optimal play on both sides: each mover picks the child
// whose value is best for them.
Outcome out(const Game& g);

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1}
                                                          << 20;

// Number of distinct strategies of s in g (product of arities over the
// owner's non-leaf nodes), saturating at UINT64_MAX.
std::uint64_t strategy_count(const Game& g, Player s);

// Lazily indexed strategies of one player, ordered lexicographically by
// (sorted node path, child index); index 0 picks child 0 everywhere.
class StrategyEnumerator {
 public:
  StrategyEnumerator(const Game& g, Player s);

  std::uint64_t size() const { return size_; }
  Player owner() const { return owner_; }
  Strategy at(std::uint64_t index) const;

 private:
  Player owner_;
  std::vector<NodePath> paths_;
  std::vector<int> arities_;
  std::uint64_t size_;
};

// Materialized list in the same order. Throws LimitError when the count
// exceeds max_count.
std::vector<Strategy> enumerate_strategies(
    const Game& g, Player s, std::uint64_t max_count = kDefaultEnumerationLimit);

// A strategy guaranteeing win_for(s) against every opposing strategy, or
// nullopt when s cannot force a win. Extracted during backward induction;
// ties break toward the smallest child index at every owned node.
std::optional<Strategy> winning_strategy(const Game& g, Player s);

}  // namespace adtgame

#endif  // ADTGAME_GAME_HPP_
