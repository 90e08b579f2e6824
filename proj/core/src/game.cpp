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

#include "adtgame/game.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace adtgame {

std::string outcome_text(Outcome v) {
  return v == Outcome::ProponentWins ? "(1,0)" : "(0,1)";
}

Game Game::leaf(Player mover, Outcome outcome) {
  return Game(
      std::make_shared<const Node>(Node{GameKind::Leaf, mover, outcome, {}}));
}

Game Game::nonleaf(Player mover, std::vector<Game> children) {
  return Game(std::make_shared<const Node>(Node{
      GameKind::NonLeaf, mover, Outcome::ProponentWins, std::move(children)}));
}

bool Game::operator==(const Game& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->mover != other.node_->mover)
    return false;
  if (node_->kind == GameKind::Leaf)
    return node_->outcome == other.node_->outcome;
  return node_->children == other.node_->children;
}

std::size_t Game::node_count() const {
  std::size_t n = 1;
  for (const Game& c : children()) n += c.node_count();
  return n;
}

std::size_t Game::internal_node_count() const {
  if (kind() == GameKind::Leaf) return 0;
  std::size_t n = 1;
  for (const Game& c : children()) n += c.internal_node_count();
  return n;
}

namespace {

void validate_game_rec(const Game& g, NodePath& path,
                       ValidationReport& report) {
  if (g.kind() == GameKind::NonLeaf && g.children().empty()) {
    report.violations.push_back({path, "node needs at least one child"});
  }
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    const Game& c = g.children()[i];
    path.steps.push_back(static_cast<int>(i));
    if (c.mover() != opposite(g.mover())) {
      report.violations.push_back(
          {path, std::string("players must alternate: child of a ") +
                     player_char(g.mover()) + " node must belong to " +
                     player_char(opposite(g.mover()))});
    }
    validate_game_rec(c, path, report);
    path.steps.pop_back();
  }
}

void nonleaf_paths_rec(const Game& g, NodePath& path,
                       const std::optional<Player>& s,
                       std::vector<NodePath>& out) {
  if (g.kind() == GameKind::NonLeaf && (!s || g.mover() == *s))
    out.push_back(path);
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    path.steps.push_back(static_cast<int>(i));
    nonleaf_paths_rec(g.children()[i], path, s, out);
    path.steps.pop_back();
  }
}

int consult(const Strategy& sigma, const NodePath& at, std::size_t arity) {
  auto it = sigma.choices.find(at);
  if (it == sigma.choices.end()) {
    throw StrategyError(std::string("strategy for ") +
                        player_char(sigma.owner) + " has no choice at " +
                        at.to_string());
  }
  if (it->second < 0 || static_cast<std::size_t>(it->second) >= arity) {
    throw StrategyError("choice " + std::to_string(it->second) + " at " +
                        at.to_string() + " is out of range");
  }
  return it->second;
}

Outcome out_strategy_rec(const Game& g, NodePath& path,
                         const Strategy& sigma_s) {
  if (g.kind() == GameKind::Leaf) return g.outcome();
  if (g.mover() == sigma_s.owner) {
    const int k = consult(sigma_s, path, g.children().size());
    path.steps.push_back(k);
    const Outcome v = out_strategy_rec(g.children()[k], path, sigma_s);
    path.steps.pop_back();
    return v;
  }
  std::optional<Outcome> best;
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    path.steps.push_back(static_cast<int>(i));
    const Outcome v = out_strategy_rec(g.children()[i], path, sigma_s);
    path.steps.pop_back();
    best = best ? outcome_max(*best, v, g.mover()) : v;
  }
  return *best;
}

Outcome out_rec(const Game& g) {
  if (g.kind() == GameKind::Leaf) return g.outcome();
  std::optional<Outcome> best;
  for (const Game& c : g.children()) {
    const Outcome v = out_rec(c);
    best = best ? outcome_max(*best, v, g.mover()) : v;
  }
  if (!best) throw EvalError("node without children has no value");
  return *best;
}

Outcome solve_rec(const Game& g, NodePath& path, Player s,
                  std::map<NodePath, int>& choices) {
  if (g.kind() == GameKind::Leaf) return g.outcome();
  std::optional<Outcome> best;
  std::optional<int> best_index;
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    path.steps.push_back(static_cast<int>(i));
    const Outcome v = solve_rec(g.children()[i], path, s, choices);
    path.steps.pop_back();
    if (!best || !outcome_leq(v, *best, g.mover())) {
      best = v;
      best_index = static_cast<int>(i);
    }
  }
  if (!best) throw EvalError("node without children has no value");
  if (g.mover() == s) choices[path] = *best_index;
  return *best;
}

}  // namespace

ValidationReport validate_game(const Game& g) {
  ValidationReport report;
  NodePath path;
  validate_game_rec(g, path, report);
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.path < b.path;
                   });
  return report;
}

const Game& subgame_at(const Game& g, const NodePath& path) {
  const Game* cur = &g;
  for (int step : path.steps) {
    auto kids = cur->children();
    if (step < 0 || static_cast<std::size_t>(step) >= kids.size()) {
      throw EvalError("no subgame at path " + path.to_string());
    }
    cur = &kids[static_cast<std::size_t>(step)];
  }
  return *cur;
}

std::vector<NodePath> nonleaf_paths(const Game& g, Player s) {
  std::vector<NodePath> out;
  NodePath path;
  nonleaf_paths_rec(g, path, s, out);
  return out;
}

std::vector<NodePath> nonleaf_paths(const Game& g) {
  std::vector<NodePath> out;
  NodePath path;
  nonleaf_paths_rec(g, path, std::nullopt, out);
  return out;
}

StrategyProfile::StrategyProfile() {
  for_proponent.owner = Player::Proponent;
  for_opponent.owner = Player::Opponent;
}

StrategyProfile::StrategyProfile(Strategy p, Strategy o)
    : for_proponent(std::move(p)), for_opponent(std::move(o)) {
  if (for_proponent.owner != Player::Proponent ||
      for_opponent.owner != Player::Opponent) {
    throw StrategyError("profile sides must be owned by p and o respectively");
  }
}

ValidationReport validate_strategy(const Game& g, const Strategy& sigma) {
  ValidationReport report;
  std::set<NodePath> owned;
  for (const NodePath& p : nonleaf_paths(g, sigma.owner)) owned.insert(p);
  for (const NodePath& p : owned) {
    auto it = sigma.choices.find(p);
    if (it == sigma.choices.end()) {
      report.violations.push_back({p, "missing choice"});
      continue;
    }
    const std::size_t arity = subgame_at(g, p).children().size();
    if (it->second < 0 || static_cast<std::size_t>(it->second) >= arity) {
      report.violations.push_back(
          {p, "choice " + std::to_string(it->second) + " is out of range"});
    }
  }
  for (const auto& [p, k] : sigma.choices) {
    if (!owned.contains(p)) {
      report.violations.push_back(
          {p, std::string("no non-leaf node of ") + player_char(sigma.owner) +
                  " here"});
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.path < b.path;
                   });
  return report;
}

Outcome out_profile(const Game& g, const StrategyProfile& sigma) {
  const Game* cur = &g;
  NodePath path;
  while (cur->kind() == GameKind::NonLeaf) {
    const Strategy& turn = sigma.for_player(cur->mover());
    const int k = consult(turn, path, cur->children().size());
    path.steps.push_back(k);
    cur = &cur->children()[static_cast<std::size_t>(k)];
  }
  return cur->outcome();
}

Outcome out_strategy(const Game& g, const Strategy& sigma_s) {
  NodePath path;
  return out_strategy_rec(g, path, sigma_s);
}

Outcome out(const Game& g) { return out_rec(g); }

std::uint64_t strategy_count(const Game& g, Player s) {
  std::uint64_t count = 1;
  for (const NodePath& p : nonleaf_paths(g, s)) {
    const std::uint64_t arity = subgame_at(g, p).children().size();
    if (arity != 0 && count > UINT64_MAX / arity) return UINT64_MAX;
    count *= arity == 0 ? 1 : arity;
  }
  return count;
}

StrategyEnumerator::StrategyEnumerator(const Game& g, Player s)
    : owner_(s), paths_(nonleaf_paths(g, s)) {
  arities_.reserve(paths_.size());
  size_ = 1;
  for (const NodePath& p : paths_) {
    const std::size_t arity = subgame_at(g, p).children().size();
    if (arity == 0) throw EvalError("cannot enumerate over a childless node");
    arities_.push_back(static_cast<int>(arity));
    if (size_ > UINT64_MAX / arity) {
      size_ = UINT64_MAX;
    } else {
      size_ *= arity;
    }
  }
}

Strategy StrategyEnumerator::at(std::uint64_t index) const {
  Strategy sigma;
  sigma.owner = owner_;
  std::uint64_t rest = index;
  for (std::size_t i = paths_.size(); i-- > 0;) {
    const auto arity = static_cast<std::uint64_t>(arities_[i]);
    sigma.choices[paths_[i]] = static_cast<int>(rest % arity);
    rest /= arity;
  }
  return sigma;
}

std::vector<Strategy> enumerate_strategies(const Game& g, Player s,
                                           std::uint64_t max_count) {
  StrategyEnumerator en(g, s);
  if (en.size() > max_count) {
    throw LimitError("strategy space of " + std::to_string(en.size()) +
                     " exceeds the limit of " + std::to_string(max_count));
  }
  std::vector<Strategy> out;
  out.reserve(static_cast<std::size_t>(en.size()));
  for (std::uint64_t i = 0; i < en.size(); ++i) out.push_back(en.at(i));
  return out;
}

std::optional<Strategy> winning_strategy(const Game& g, Player s) {
  Strategy sigma;
  sigma.owner = s;
  NodePath path;
  const Outcome value = solve_rec(g, path, s, sigma.choices);
  if (value != win_for(s)) return std::nullopt;
  return sigma;
}

}  // namespace adtgame
