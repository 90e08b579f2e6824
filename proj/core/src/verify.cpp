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

#include "adtgame/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <utility>

#include "adtgame/dsl.hpp"
#include "adtgame/translate.hpp"

namespace adtgame {

namespace {

constexpr Player kP = Player::Proponent;
constexpr Player kO = Player::Opponent;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t exp2_sat(std::size_t bits) {
  return bits >= 64 ? UINT64_MAX : std::uint64_t{1} << bits;
}

// --- generators -----------------------------------------------------------

Game gen_game_rec(std::mt19937_64& rng, int remaining, int max_arity,
                  Player mover, bool at_root) {
  std::uniform_int_distribution<int> percent(0, 99);
  const int leaf_chance = at_root ? 10 : 35;
  if (remaining <= 1 || percent(rng) < leaf_chance) {
    std::uniform_int_distribution<int> coin(0, 1);
    return Game::leaf(mover, coin(rng) == 0 ? Outcome::ProponentWins
                                            : Outcome::OpponentWins);
  }
  std::uniform_int_distribution<int> arity(1, max_arity);
  const int n = arity(rng);
  std::vector<Game> children;
  children.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    children.push_back(
        gen_game_rec(rng, remaining - 1, max_arity, opposite(mover), false));
  }
  return Game::nonleaf(mover, std::move(children));
}

bool game_fits(const GenConfig& cfg, const Game& g) {
  if (cfg.max_internal_nodes > 0 &&
      g.internal_node_count() >
          static_cast<std::size_t>(cfg.max_internal_nodes)) {
    return false;
  }
  const std::uint64_t profiles =
      sat_mul(strategy_count(g, kP), strategy_count(g, kO));
  return profiles <= cfg.budget;
}

struct LabelCounters {
  int proponent = 0;
  int opponent = 0;

  std::string fresh(Player s) {
    int& n = s == kP ? proponent : opponent;
    ++n;
    return std::string(1, player_char(s)) + std::to_string(n);
  }
};

ADTerm gen_term_rec(std::mt19937_64& rng, int remaining, int max_arity,
                    Player owner, bool at_root, LabelCounters& names) {
  std::uniform_int_distribution<int> percent(0, 99);
  const int leaf_chance = at_root ? 10 : 30;
  if (remaining <= 1 || percent(rng) < leaf_chance) {
    return ADTerm::basic(names.fresh(owner), owner);
  }
  std::uniform_int_distribution<int> pick(0, 99);
  const int kind = pick(rng);
  if (kind < 35 || kind >= 70) {
    std::uniform_int_distribution<int> arity(1, max_arity);
    const int n = arity(rng);
    std::vector<ADTerm> children;
    children.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      children.push_back(
          gen_term_rec(rng, remaining - 1, max_arity, owner, false, names));
    }
    return kind < 35 ? ADTerm::disjunction(owner, std::move(children))
                     : ADTerm::conjunction(owner, std::move(children));
  }
  ADTerm claim =
      gen_term_rec(rng, remaining - 1, max_arity, owner, false, names);
  ADTerm countermeasure = gen_term_rec(rng, remaining - 1, max_arity,
                                       opposite(owner), false, names);
  return ADTerm::counter(owner, std::move(claim), std::move(countermeasure));
}

bool term_fits(const GenConfig& cfg, const ADTerm& t) {
  if (cfg.max_internal_nodes > 0 &&
      t.internal_node_count() >
          static_cast<std::size_t>(cfg.max_internal_nodes)) {
    return false;
  }
  const std::size_t p = labels(t, kP).size();
  const std::size_t o = labels(t, kO).size();
  if (p > static_cast<std::size_t>(cfg.max_basic_actions) ||
      o > static_cast<std::size_t>(cfg.max_basic_actions)) {
    return false;
  }
  return exp2_sat(p + o) <= cfg.budget;
}

// --- cost estimates -------------------------------------------------------

std::uint64_t term_profile_space(const ADTerm& t) {
  return exp2_sat(labels(t, kP).size() + labels(t, kO).size());
}

std::uint64_t game_check_cost(const std::string& name, const Game& g) {
  if (name == "thm2") {
    return sat_mul(strategy_count(g, kP), strategy_count(g, kO));
  }
  if (name == "thm3") {
    const ADTerm t = game_to_adterm(g).term;
    return sat_mul(strategy_count(g, kP), exp2_sat(labels(t, kO).size()));
  }
  if (name == "cor1") {
    return term_profile_space(game_to_adterm(g).term);
  }
  if (name == "non-surjectivity") return strategy_count(g, kP);
  return g.node_count();  // determinacy, conjunction-free
}

std::uint64_t adterm_check_cost(const std::string& name, const ADTerm& t) {
  if (name == "thm4") {
    return sat_mul(term_profile_space(t), 1 + t.internal_node_count());
  }
  if (name == "locality") return sat_mul(term_profile_space(t), 5);
  if (name == "round-trip") {
    const ADTerm back = game_to_adterm(adterm_to_game(t).game).term;
    return sat_add(term_profile_space(t), term_profile_space(back));
  }
  return term_profile_space(t);  // partition, cor2
}

// --- counterexample formatting --------------------------------------------

std::string strategy_line(const Strategy& sigma) {
  std::string s = std::string("sigma_") + player_char(sigma.owner) + " {";
  bool first = true;
  for (const auto& [path, index] : sigma.choices) {
    if (!first) s += ", ";
    first = false;
    s += path.to_string() + " -> " + std::to_string(index);
  }
  return s + "}";
}

std::string assignment_line(const BasicAssignment& beta) {
  std::string s = std::string("beta_") + player_char(beta.owner) + " {";
  bool first = true;
  for (const auto& [label, value] : beta.values) {
    if (!first) s += ", ";
    first = false;
    s += label + "=" + (value ? "true" : "false");
  }
  return s + "}";
}

// --- the properties, exhaustive per instance ------------------------------

std::optional<CheckCounterexample> prop_partition(const ADTerm& t) {
  AssignmentEnumerator mine(labels(t, kP), kP);
  AssignmentEnumerator theirs(labels(t, kO), kO);
  for (std::uint64_t i = 0; i < mine.size(); ++i) {
    const BasicAssignment bp = mine.at(i);
    for (std::uint64_t j = 0; j < theirs.size(); ++j) {
      const BasicAssignmentProfile beta(bp, theirs.at(j));
      const bool sp = successful_under_profile(t, beta, kP);
      const bool so = successful_under_profile(t, beta, kO);
      if (sp == so) {
        return CheckCounterexample{
            print_adterm(t),
            assignment_line(beta.for_proponent) + "; " +
                assignment_line(beta.for_opponent) + "; successful(p)=" +
                (sp ? "true" : "false") + "; successful(o)=" +
                (so ? "true" : "false")};
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_thm2(const Game& g) {
  const ADTerm t = game_to_adterm(g).term;
  const StrategyEnumerator ep(g, kP);
  const StrategyEnumerator eo(g, kO);
  for (std::uint64_t i = 0; i < ep.size(); ++i) {
    const Strategy sp = ep.at(i);
    const BasicAssignment bp = strategy_to_assignment(sp, g);
    for (std::uint64_t j = 0; j < eo.size(); ++j) {
      const Strategy so = eo.at(j);
      const BasicAssignment bo = strategy_to_assignment(so, g);
      const Outcome value = out_profile(g, StrategyProfile(sp, so));
      const bool wins = value == Outcome::ProponentWins;
      const bool succeeds =
          successful_under_profile(t, BasicAssignmentProfile(bp, bo), kP);
      if (wins != succeeds) {
        return CheckCounterexample{
            print_game(g), strategy_line(sp) + "; " + strategy_line(so) +
                               "; out_profile=" + outcome_text(value) +
                               "; successful(p)=" +
                               (succeeds ? "true" : "false")};
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_thm3(const Game& g) {
  const ADTerm t = game_to_adterm(g).term;
  const StrategyEnumerator ep(g, kP);
  for (std::uint64_t i = 0; i < ep.size(); ++i) {
    const Strategy sp = ep.at(i);
    const BasicAssignment bp = strategy_to_assignment(sp, g);
    const Outcome value = out_strategy(g, sp);
    const bool wins = value == Outcome::ProponentWins;
    const bool guarantees = successful_under_assignment(t, bp, kP);
    if (wins != guarantees) {
      return CheckCounterexample{
          print_game(g), strategy_line(sp) + "; out_strategy=" +
                             outcome_text(value) + "; guarantees(p)=" +
                             (guarantees ? "true" : "false")};
    }
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_cor1(const Game& g) {
  const ADTerm t = game_to_adterm(g).term;
  const bool wins = out(g) == Outcome::ProponentWins;
  const auto witness = satisfiable_for(t, kP);
  if (wins != witness.has_value()) {
    return CheckCounterexample{
        print_game(g),
        std::string("out=") + outcome_text(out(g)) + "; satisfiable(p)=" +
            (witness ? "true" : "false")};
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_thm4(const ADTerm& t) {
  const Game g = adterm_to_game(t).game;
  AssignmentEnumerator mine(labels(t, kP), kP);
  for (std::uint64_t i = 0; i < mine.size(); ++i) {
    const BasicAssignment bp = mine.at(i);
    const bool guarantees = successful_under_assignment(t, bp, kP);
    const Strategy sp = assignment_to_strategy(bp, t);
    const Outcome value = out_strategy(g, sp);
    const bool wins = value == Outcome::ProponentWins;
    if (guarantees != wins) {
      return CheckCounterexample{
          print_adterm(t), assignment_line(bp) + "; guarantees(p)=" +
                               (guarantees ? "true" : "false") +
                               "; out_strategy=" + outcome_text(value)};
    }
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_cor2(const ADTerm& t) {
  const Game g = adterm_to_game(t).game;
  const auto witness = satisfiable_for(t, kP);
  const bool wins = out(g) == Outcome::ProponentWins;
  if (witness.has_value() != wins) {
    return CheckCounterexample{
        print_adterm(t), std::string("satisfiable(p)=") +
                             (witness ? "true" : "false") + "; out=" +
                             outcome_text(out(g))};
  }
  return std::nullopt;
}

bool contains_conjunction(const ADTerm& t) {
  if (t.kind() == TermKind::And) return true;
  for (const ADTerm& c : t.children()) {
    if (contains_conjunction(c)) return true;
  }
  return false;
}

std::optional<CheckCounterexample> prop_conjunction_free(const Game& g) {
  const ADTerm t = game_to_adterm(g).term;
  if (contains_conjunction(t)) {
    return CheckCounterexample{print_game(g),
                               "translation contains a conjunction: " +
                                   print_adterm(t)};
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_round_trip(const ADTerm& t) {
  const Game g = adterm_to_game(t).game;
  const ADTerm back = game_to_adterm(g).term;
  const bool a = satisfiable_for(t, kP).has_value();
  const bool b = out(g) == Outcome::ProponentWins;
  const bool c = satisfiable_for(back, kP).has_value();
  if (a != b || b != c) {
    return CheckCounterexample{
        print_adterm(t),
        std::string("satisfiable(p)=") + (a ? "true" : "false") +
            "; game out=(1,0)? " + (b ? "true" : "false") +
            "; satisfiable(p) after round trip=" + (c ? "true" : "false")};
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_determinacy(const Game& g) {
  const auto wp = winning_strategy(g, kP);
  const auto wo = winning_strategy(g, kO);
  const Outcome value = out(g);
  std::string problem;
  if (wp.has_value() == wo.has_value()) {
    problem = wp ? "both players have winning strategies"
                 : "neither player has a winning strategy";
  } else if (outcome_winner(value) != (wp ? kP : kO)) {
    problem = "out() does not name the winning player";
  } else {
    const Strategy& best = wp ? *wp : *wo;
    if (out_strategy(g, best) != value) {
      problem = "the winning strategy does not force out()";
    }
  }
  if (!problem.empty()) {
    return CheckCounterexample{
        print_game(g), problem + "; out=" + outcome_text(value)};
  }
  return std::nullopt;
}

std::optional<CheckCounterexample> prop_locality(const ADTerm& t) {
  AssignmentEnumerator mine(labels(t, kP), kP);
  AssignmentEnumerator theirs(labels(t, kO), kO);
  for (std::uint64_t i = 0; i < mine.size(); ++i) {
    for (std::uint64_t j = 0; j < theirs.size(); ++j) {
      const BasicAssignmentProfile beta(mine.at(i), theirs.at(j));
      const bool base = sat(t, beta);
      for (int jp = 0; jp < 2; ++jp) {
        for (int jo = 0; jo < 2; ++jo) {
          BasicAssignmentProfile extended = beta;
          extended.for_proponent.values["zz.padding"] = jp == 1;
          extended.for_opponent.values["zz.padding"] = jo == 1;
          if (sat(t, extended) != base) {
            return CheckCounterexample{
                print_adterm(t),
                assignment_line(beta.for_proponent) + "; " +
                    assignment_line(beta.for_opponent) +
                    "; sat flips when unused labels are added"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// An assignment turning on every proponent label of the translation sets
// every sibling choice label true at once, which no strategy image does
// (images pick exactly one sibling). Returns the witness when the game
// offers a real choice.
std::pair<std::optional<CheckCounterexample>, std::optional<std::string>>
prop_non_surjectivity(const Game& g) {
  bool has_choice = false;
  for (const NodePath& p : nonleaf_paths(g, kP)) {
    if (subgame_at(g, p).children().size() >= 2) has_choice = true;
  }
  if (!has_choice) return {std::nullopt, std::nullopt};
  const ADTerm t = game_to_adterm(g).term;
  BasicAssignment beta;
  beta.owner = kP;
  for (const std::string& name : labels(t, kP)) beta.values[name] = true;
  const StrategyEnumerator ep(g, kP);
  for (std::uint64_t i = 0; i < ep.size(); ++i) {
    if (strategy_to_assignment(ep.at(i), g) == beta) {
      return {CheckCounterexample{print_game(g),
                                  assignment_line(beta) +
                                      " is the image of " +
                                      strategy_line(ep.at(i))},
              std::nullopt};
    }
  }
  return {std::nullopt, print_assignment(beta)};
}

// --- shrinking ------------------------------------------------------------

Game remove_game_child(const Game& g, const NodePath& at, std::size_t index,
                       std::size_t depth = 0) {
  std::vector<Game> children;
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    if (depth == at.steps.size() && i == index) continue;
    if (depth < at.steps.size() &&
        i == static_cast<std::size_t>(at.steps[depth])) {
      children.push_back(
          remove_game_child(g.children()[i], at, index, depth + 1));
    } else {
      children.push_back(g.children()[i]);
    }
  }
  return Game::nonleaf(g.mover(), std::move(children));
}

ADTerm remove_term_child(const ADTerm& t, const NodePath& at,
                         std::size_t index, std::size_t depth = 0) {
  std::vector<ADTerm> children;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (depth == at.steps.size() && i == index) continue;
    if (depth < at.steps.size() &&
        i == static_cast<std::size_t>(at.steps[depth])) {
      children.push_back(
          remove_term_child(t.children()[i], at, index, depth + 1));
    } else {
      children.push_back(t.children()[i]);
    }
  }
  switch (t.kind()) {
    case TermKind::Or:
      return ADTerm::disjunction(t.owner(), std::move(children));
    case TermKind::And:
      return ADTerm::conjunction(t.owner(), std::move(children));
    case TermKind::Counter:
      return ADTerm::counter(t.owner(), children[0], children[1]);
    default:
      return t;
  }
}

ADTerm rename_label(const ADTerm& t, Player owner, const std::string& from,
                    const std::string& to) {
  if (t.kind() == TermKind::Basic) {
    if (t.owner() == owner && t.label() == from)
      return ADTerm::basic(to, owner);
    return t;
  }
  std::vector<ADTerm> children;
  children.reserve(t.children().size());
  for (const ADTerm& c : t.children())
    children.push_back(rename_label(c, owner, from, to));
  switch (t.kind()) {
    case TermKind::Or:
      return ADTerm::disjunction(t.owner(), std::move(children));
    case TermKind::And:
      return ADTerm::conjunction(t.owner(), std::move(children));
    case TermKind::Counter:
      return ADTerm::counter(t.owner(), children[0], children[1]);
    default:
      return t;
  }
}

// Wide non-leaf positions whose children can be dropped one at a time.
template <typename Tree>
std::vector<NodePath> wide_nodes(const Tree& tree,
                                 bool (*droppable)(const Tree&)) {
  std::vector<NodePath> out;
  struct Walker {
    bool (*droppable)(const Tree&);
    std::vector<NodePath>* out;
    void walk(const Tree& node, NodePath& path) {
      if (droppable(node)) out->push_back(path);
      for (std::size_t i = 0; i < node.children().size(); ++i) {
        path.steps.push_back(static_cast<int>(i));
        walk(node.children()[i], path);
        path.steps.pop_back();
      }
    }
  } walker{droppable, &out};
  NodePath path;
  walker.walk(tree, path);
  return out;
}

bool game_droppable(const Game& g) {
  return g.kind() == GameKind::NonLeaf && g.children().size() >= 2;
}

bool term_droppable(const ADTerm& t) {
  return (t.kind() == TermKind::Or || t.kind() == TermKind::And) &&
         t.children().size() >= 2;
}

}  // namespace

Game shrink_game(const Game& g,
                 const std::function<bool(const Game&)>& still_fails) {
  Game current = g;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const NodePath& at : wide_nodes<Game>(current, game_droppable)) {
      const std::size_t arity = subgame_at(current, at).children().size();
      for (std::size_t i = 0; i < arity; ++i) {
        const Game candidate = remove_game_child(current, at, i);
        if (still_fails(candidate)) {
          current = candidate;
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
  }
  return current;
}

ADTerm shrink_adterm(const ADTerm& t,
                     const std::function<bool(const ADTerm&)>& still_fails) {
  ADTerm current = t;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const NodePath& at : wide_nodes<ADTerm>(current, term_droppable)) {
      const std::size_t arity = subterm_at(current, at).children().size();
      for (std::size_t i = 0; i < arity; ++i) {
        const ADTerm candidate = remove_term_child(current, at, i);
        if (still_fails(candidate)) {
          current = candidate;
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
  }
  // Then try to collapse distinct same-owner labels into one.
  progressed = true;
  while (progressed) {
    progressed = false;
    for (Player s : {kP, kO}) {
      const std::vector<std::string> mine = labels(current, s);
      for (std::size_t i = 0; i < mine.size() && !progressed; ++i) {
        for (std::size_t j = i + 1; j < mine.size() && !progressed; ++j) {
          const ADTerm candidate =
              rename_label(current, s, mine[j], mine[i]);
          if (still_fails(candidate)) {
            current = candidate;
            progressed = true;
          }
        }
      }
      if (progressed) break;
    }
  }
  return current;
}

// --- the named checks ------------------------------------------------------

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "partition",  "thm2",       "thm3",
      "cor1",       "thm4",       "cor2",
      "conjunction-free", "round-trip", "determinacy",
      "locality",   "non-surjectivity"};
  return names;
}

namespace {

bool is_game_check(const std::string& name) {
  return name == "thm2" || name == "thm3" || name == "cor1" ||
         name == "determinacy" || name == "conjunction-free" ||
         name == "non-surjectivity";
}

bool is_known_check(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<CheckCounterexample> run_game_prop(const std::string& name,
                                                 const Game& g) {
  if (name == "thm2") return prop_thm2(g);
  if (name == "thm3") return prop_thm3(g);
  if (name == "cor1") return prop_cor1(g);
  if (name == "determinacy") return prop_determinacy(g);
  if (name == "conjunction-free") return prop_conjunction_free(g);
  if (name == "non-surjectivity") return prop_non_surjectivity(g).first;
  throw EvalError("check '" + name + "' does not take game instances");
}

std::optional<CheckCounterexample> run_adterm_prop(const std::string& name,
                                                   const ADTerm& t) {
  if (name == "partition") return prop_partition(t);
  if (name == "thm4") return prop_thm4(t);
  if (name == "cor2") return prop_cor2(t);
  if (name == "round-trip") return prop_round_trip(t);
  if (name == "locality") return prop_locality(t);
  throw EvalError("check '" + name + "' does not take term instances");
}

Game two_move_game() {
  std::vector<Game> inner;
  inner.push_back(Game::leaf(kP, Outcome::OpponentWins));
  inner.push_back(Game::leaf(kP, Outcome::ProponentWins));
  std::vector<Game> root;
  root.push_back(Game::nonleaf(kO, std::move(inner)));
  root.push_back(Game::leaf(kO, Outcome::OpponentWins));
  return Game::nonleaf(kP, std::move(root));
}

Game gen_game_for_check(const std::string& name, const GenConfig& cfg,
                        int instance) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    GenConfig local = cfg;
    local.seed = mix(cfg.seed, mix(static_cast<std::uint64_t>(instance) + 1,
                                   attempt));
    local.max_depth =
        std::max<int>(1, cfg.max_depth - static_cast<int>(attempt / 64));
    const Game g = gen_game(local);
    if (game_check_cost(name, g) <= cfg.budget) return g;
  }
}

ADTerm gen_adterm_for_check(const std::string& name, const GenConfig& cfg,
                            int instance) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    GenConfig local = cfg;
    local.seed = mix(cfg.seed, mix(static_cast<std::uint64_t>(instance) + 1,
                                   attempt));
    local.max_depth =
        std::max<int>(1, cfg.max_depth - static_cast<int>(attempt / 64));
    const ADTerm t = gen_adterm(local);
    if (adterm_check_cost(name, t) <= cfg.budget) return t;
  }
}

}  // namespace

Game gen_game(const GenConfig& cfg) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(mix(cfg.seed, attempt));
    const int depth =
        std::max<int>(1, cfg.max_depth - static_cast<int>(attempt / 64));
    std::uniform_int_distribution<int> coin(0, 1);
    const Player mover = coin(rng) == 0 ? kP : kO;
    Game g = gen_game_rec(rng, depth, std::max(1, cfg.max_arity), mover, true);
    if (game_fits(cfg, g)) return g;
  }
}

ADTerm gen_adterm(const GenConfig& cfg) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(mix(cfg.seed, splitmix64(attempt)));
    const int depth =
        std::max<int>(1, cfg.max_depth - static_cast<int>(attempt / 64));
    std::uniform_int_distribution<int> coin(0, 1);
    const Player owner = coin(rng) == 0 ? kP : kO;
    LabelCounters names;
    ADTerm t = gen_term_rec(rng, depth, std::max(1, cfg.max_arity), owner,
                            true, names);
    if (term_fits(cfg, t)) return t;
  }
}

std::optional<CheckCounterexample> check_game_instance(const std::string& name,
                                                       const Game& g,
                                                       std::uint64_t budget) {
  if (!is_known_check(name)) throw EvalError("unknown check '" + name + "'");
  if (game_check_cost(name, g) > budget) {
    throw BudgetError("check '" + name + "' skipped instance " +
                      print_game(g) + ": enumeration exceeds the budget of " +
                      std::to_string(budget));
  }
  return run_game_prop(name, g);
}

std::optional<CheckCounterexample> check_adterm_instance(
    const std::string& name, const ADTerm& t, std::uint64_t budget) {
  if (!is_known_check(name)) throw EvalError("unknown check '" + name + "'");
  if (adterm_check_cost(name, t) > budget) {
    throw BudgetError("check '" + name + "' skipped instance " +
                      print_adterm(t) +
                      ": enumeration exceeds the budget of " +
                      std::to_string(budget));
  }
  return run_adterm_prop(name, t);
}

CheckReport check(const std::string& name, const GenConfig& cfg) {
  if (!is_known_check(name)) throw EvalError("unknown check '" + name + "'");
  CheckReport report;
  report.check_name = name;
  report.config = cfg;
  const auto start = std::chrono::steady_clock::now();

  if (name == "non-surjectivity") {
    const Game g = two_move_game();
    auto [fail, witness] = prop_non_surjectivity(g);
    report.instances_tried = 1;
    report.counterexample = fail;
    report.witness = witness;
  } else if (is_game_check(name)) {
    for (int i = 0; i < cfg.instance_count; ++i) {
      const Game g = gen_game_for_check(name, cfg, i);
      ++report.instances_tried;
      auto fail = run_game_prop(name, g);
      if (fail) {
        const auto keeps_failing = [&](const Game& candidate) {
          if (game_check_cost(name, candidate) > cfg.budget) return false;
          if (!validate_game(candidate).ok()) return false;
          return run_game_prop(name, candidate).has_value();
        };
        const Game small = shrink_game(g, keeps_failing);
        report.counterexample = run_game_prop(name, small);
        break;
      }
    }
  } else {
    for (int i = 0; i < cfg.instance_count; ++i) {
      const ADTerm t = gen_adterm_for_check(name, cfg, i);
      ++report.instances_tried;
      if (name == "round-trip" && !report.witness) {
        const ADTerm back = game_to_adterm(adterm_to_game(t).game).term;
        if (back != t) {
          report.witness = "input " + print_adterm(t) + " round-trips to " +
                           print_adterm(back);
        }
      }
      auto fail = run_adterm_prop(name, t);
      if (fail) {
        const auto keeps_failing = [&](const ADTerm& candidate) {
          if (adterm_check_cost(name, candidate) > cfg.budget) return false;
          if (!validate(candidate).ok()) return false;
          return run_adterm_prop(name, candidate).has_value();
        };
        const ADTerm small = shrink_adterm(t, keeps_failing);
        report.counterexample = run_adterm_prop(name, small);
        break;
      }
    }
  }

  const auto end = std::chrono::steady_clock::now();
  report.elapsed_seconds =
      std::chrono::duration<double>(end - start).count();
  return report;
}

}  // namespace adtgame
