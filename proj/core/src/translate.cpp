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

#include "adtgame/translate.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace adtgame {

namespace {

std::string dotted(const NodePath& at) {
  std::string s;
  for (int step : at.steps) {
    s += '.';
    s += std::to_string(step);
  }
  return s;
}

}  // namespace

std::string FreshNames::v_label(const NodePath& at) { return "v" + dotted(at); }

std::string FreshNames::u_leaf_label(const NodePath& at) {
  return "u" + dotted(at);
}

std::string FreshNames::u_choice_label(const NodePath& at, int k) {
  return "u" + dotted(at) + ".c" + std::to_string(k);
}

std::optional<NodePath> CorrespondenceMap::target_for(
    const NodePath& source) const {
  for (const auto& [src, tgt] : pairs) {
    if (src == source) return tgt;
  }
  return std::nullopt;
}

namespace {

void require_valid_game(const Game& g) {
  const ValidationReport report = validate_game(g);
  if (!report.ok()) {
    throw ValidationError("invalid game:\n" + report.to_string());
  }
}

void require_valid_term(const ADTerm& t) {
  const ValidationReport report = validate(t);
  if (!report.ok()) {
    throw ValidationError("invalid term:\n" + report.to_string());
  }
}

// A winning leaf for its mover is an action of the mover that always
// succeeds. A losing leaf yields the winner's always taken countermeasure on
// the mover's claim.
ADTerm leaf_term(const Game& g, const NodePath& at) {
  const Player m = g.mover();
  const Player w = outcome_winner(g.outcome());
  if (m == w) return ADTerm::basic(FreshNames::v_label(at), w);
  return ADTerm::counter(m, ADTerm::basic(FreshNames::u_leaf_label(at), m),
                         ADTerm::basic(FreshNames::v_label(at), w));
}

ADTerm to_term_rec(const Game& g, NodePath& at, NodePath& target,
                   CorrespondenceMap& map) {
  map.pairs.emplace_back(at, target);
  if (g.kind() == GameKind::Leaf) return leaf_term(g, at);

  // The mover picks one branch: each child becomes a counter pairing the
  // "take this branch" action with the child's own term.
  const Player m = g.mover();
  std::vector<ADTerm> options;
  options.reserve(g.children().size());
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    ADTerm pick = ADTerm::basic(
        FreshNames::u_choice_label(at, static_cast<int>(i) + 1), m);
    at.steps.push_back(static_cast<int>(i));
    target.steps.push_back(static_cast<int>(i));
    target.steps.push_back(1);
    ADTerm branch = to_term_rec(g.children()[i], at, target, map);
    target.steps.pop_back();
    target.steps.pop_back();
    at.steps.pop_back();
    options.push_back(
        ADTerm::counter(m, std::move(pick), std::move(branch)));
  }
  return ADTerm::disjunction(m, std::move(options));
}

}  // namespace

TermTranslation game_to_adterm(const Game& g) {
  require_valid_game(g);
  CorrespondenceMap map;
  NodePath at;
  NodePath target;
  ADTerm term = to_term_rec(g, at, target, map);
  return {std::move(term), std::move(map)};
}

namespace {

void assignment_rec(const Game& g, NodePath& at, const Strategy& sigma,
                    BasicAssignment& beta) {
  const Player s = sigma.owner;
  if (g.kind() == GameKind::Leaf) {
    const Player m = g.mover();
    const Player w = outcome_winner(g.outcome());
    // Leaf-derived actions are always taken by whoever owns them.
    if (m != w && s == m) beta.values[FreshNames::u_leaf_label(at)] = true;
    if (s == w) beta.values[FreshNames::v_label(at)] = true;
    return;
  }
  if (g.mover() == s) {
    auto it = sigma.choices.find(at);
    if (it == sigma.choices.end() || it->second < 0 ||
        static_cast<std::size_t>(it->second) >= g.children().size()) {
      throw StrategyError(std::string("strategy for ") + player_char(s) +
                          " is not bound at " + at.to_string());
    }
    for (std::size_t i = 0; i < g.children().size(); ++i) {
      beta.values[FreshNames::u_choice_label(at, static_cast<int>(i) + 1)] =
          static_cast<int>(i) == it->second;
    }
  }
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    at.steps.push_back(static_cast<int>(i));
    assignment_rec(g.children()[i], at, sigma, beta);
    at.steps.pop_back();
  }
}

}  // namespace

BasicAssignment strategy_to_assignment(const Strategy& sigma, const Game& g) {
  require_valid_game(g);
  BasicAssignment beta;
  beta.owner = sigma.owner;
  NodePath at;
  assignment_rec(g, at, sigma, beta);
  return beta;
}

namespace {

// Image of a basic action of s: the other player opens, then s decides
// whether to take the action; child 0 loses it, child 1 wins it.
Game basic_image(Player s) {
  const Player other = opposite(s);
  std::vector<Game> leaves;
  leaves.push_back(Game::leaf(other, win_for(other)));
  leaves.push_back(Game::leaf(other, win_for(s)));
  return Game::nonleaf(other,
                       {Game::nonleaf(s, std::move(leaves))});
}

Game to_game_rec(const ADTerm& t, NodePath& at, NodePath& target,
                 CorrespondenceMap& map) {
  map.pairs.emplace_back(at, target);
  const Player s = t.owner();
  const Player other = opposite(s);
  auto recurse = [&](std::size_t child, std::initializer_list<int> hops) {
    at.steps.push_back(static_cast<int>(child));
    for (int h : hops) target.steps.push_back(h);
    Game g = to_game_rec(t.children()[child], at, target, map);
    for (std::size_t i = 0; i < hops.size(); ++i) target.steps.pop_back();
    at.steps.pop_back();
    return g;
  };
  switch (t.kind()) {
    case TermKind::Basic:
      return basic_image(s);
    case TermKind::Or: {
      // One inner node where s picks the disjunct to pursue.
      std::vector<Game> images;
      images.reserve(t.children().size());
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        images.push_back(recurse(i, {0, static_cast<int>(i)}));
      }
      return Game::nonleaf(other, {Game::nonleaf(s, std::move(images))});
    }
    case TermKind::And: {
      // The other player picks the conjunct to attack.
      std::vector<Game> wrapped;
      wrapped.reserve(t.children().size());
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        wrapped.push_back(
            Game::nonleaf(s, {recurse(i, {static_cast<int>(i), 0})}));
      }
      return Game::nonleaf(other, std::move(wrapped));
    }
    case TermKind::Counter: {
      // The other player either plays the claim out or takes the
      // countermeasure.
      Game claim = Game::nonleaf(s, {recurse(0, {0, 0})});
      Game countermeasure = recurse(1, {1});
      std::vector<Game> options;
      options.push_back(std::move(claim));
      options.push_back(std::move(countermeasure));
      return Game::nonleaf(other, std::move(options));
    }
  }
  throw EvalError("corrupt term");
}

}  // namespace

GameTranslation adterm_to_game(const ADTerm& t) {
  require_valid_term(t);
  CorrespondenceMap map;
  NodePath at;
  NodePath target;
  Game game = to_game_rec(t, at, target, map);
  return {std::move(game), std::move(map)};
}

namespace {

class StrategyBuilder {
 public:
  StrategyBuilder(const BasicAssignment& beta, Player s) : beta_(beta), s_(s) {}

  void build(const ADTerm& t, NodePath& at, NodePath& target,
             std::map<NodePath, int>& choices) {
    const bool owned = t.owner() == s_;
    switch (t.kind()) {
      case TermKind::Basic:
        if (owned) {
          // The inner node takes the action exactly when it is assigned
          // true.
          auto it = beta_.values.find(t.label());
          if (it == beta_.values.end()) {
            throw EvalError(std::string("no value for label '") + t.label() +
                            "' of player " + player_char(s_));
          }
          choices[target.child(0)] = it->second ? 1 : 0;
        } else {
          choices[target] = 0;
        }
        return;
      case TermKind::Or: {
        if (owned) {
          // Pursue the first disjunct the assignment already guarantees.
          int pick = 0;
          for (std::size_t i = 0; i < t.children().size(); ++i) {
            at.steps.push_back(static_cast<int>(i));
            const bool won = guaranteed(t.children()[i], at);
            at.steps.pop_back();
            if (won) {
              pick = static_cast<int>(i);
              break;
            }
          }
          choices[target.child(0)] = pick;
        } else {
          choices[target] = 0;
        }
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          descend(t, i, {0, static_cast<int>(i)}, at, target, choices);
        }
        return;
      }
      case TermKind::And: {
        if (owned) {
          for (std::size_t i = 0; i < t.children().size(); ++i) {
            choices[target.child(static_cast<int>(i))] = 0;
          }
        } else {
          // Attack the first conjunct the assignment already guarantees;
          // fall back to the first one.
          int pick = 0;
          for (std::size_t i = 0; i < t.children().size(); ++i) {
            at.steps.push_back(static_cast<int>(i));
            const bool won = guaranteed(t.children()[i], at);
            at.steps.pop_back();
            if (won) {
              pick = static_cast<int>(i);
              break;
            }
          }
          choices[target] = pick;
        }
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          descend(t, i, {static_cast<int>(i), 0}, at, target, choices);
        }
        return;
      }
      case TermKind::Counter: {
        if (owned) {
          choices[target.child(0)] = 0;
        } else {
          // Take the countermeasure branch exactly when it is guaranteed.
          at.steps.push_back(1);
          const bool countered = guaranteed(t.children()[1], at);
          at.steps.pop_back();
          choices[target] = countered ? 1 : 0;
        }
        descend(t, 0, {0, 0}, at, target, choices);
        descend(t, 1, {1}, at, target, choices);
        return;
      }
    }
  }

 private:
  void descend(const ADTerm& t, std::size_t child,
               std::initializer_list<int> hops, NodePath& at, NodePath& target,
               std::map<NodePath, int>& choices) {
    at.steps.push_back(static_cast<int>(child));
    for (int h : hops) target.steps.push_back(h);
    build(t.children()[child], at, target, choices);
    for (std::size_t i = 0; i < hops.size(); ++i) target.steps.pop_back();
    at.steps.pop_back();
  }

  // Whether beta_ guarantees success for s_ on this subterm, whatever the
  // other player assigns. Memoized by subterm path.
  bool guaranteed(const ADTerm& sub, const NodePath& at) {
    auto it = memo_.find(at);
    if (it != memo_.end()) return it->second;
    const bool value = successful_under_assignment(sub, beta_, s_);
    memo_.emplace(at, value);
    return value;
  }

  const BasicAssignment& beta_;
  Player s_;
  std::map<NodePath, bool> memo_;
};

}  // namespace

Strategy assignment_to_strategy(const BasicAssignment& beta_s,
                                const ADTerm& t) {
  require_valid_term(t);
  // Surface a coverage gap at the first uncovered label in preorder.
  for (const std::string& name : labels(t, beta_s.owner)) {
    if (!beta_s.values.contains(name)) {
      throw EvalError(std::string("no value for label '") + name +
                      "' of player " + player_char(beta_s.owner));
    }
  }
  Strategy sigma;
  sigma.owner = beta_s.owner;
  StrategyBuilder builder(beta_s, beta_s.owner);
  NodePath at;
  NodePath target;
  builder.build(t, at, target, sigma.choices);
  return sigma;
}

}  // namespace adtgame
