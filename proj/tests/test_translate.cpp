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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "adtgame/dsl.hpp"
#include "adtgame/translate.hpp"
#include "adtgame/verify.hpp"

namespace {

using adtgame::ADTerm;
using adtgame::BasicAssignment;
using adtgame::CorrespondenceMap;
using adtgame::EvalError;
using adtgame::FreshNames;
using adtgame::Game;
using adtgame::NodePath;
using adtgame::Outcome;
using adtgame::Player;
using adtgame::Strategy;
using adtgame::StrategyError;
using adtgame::TermKind;
using adtgame::ValidationError;

constexpr Player kP = Player::Proponent;
constexpr Player kO = Player::Opponent;

const char* const kTwoMoveGameText = "Np(No(Lp(0,1), Lp(1,0)), Lo(0,1))";
const char* const kTwoMoveTermText =
    "or_p(c_p(u.c1, or_o(c_o(u.0.c1, c_p(u.0.0, v.0.0)), c_o(u.0.c2, "
    "v.0.1))), c_p(u.c2, v.1))";
const char* const kExampleTermText = "c_p(and_p(E, F), or_o(G))";
const char* const kExampleGameText =
    "No(Np(No(Np(No(Np(Lo(0,1), Lo(1,0)))), Np(No(Np(Lo(0,1), Lo(1,0)))))), "
    "Np(No(Np(No(Lp(1,0), Lp(0,1))))))";

BasicAssignment assign(Player owner, std::map<std::string, bool> values) {
  BasicAssignment beta;
  beta.owner = owner;
  beta.values = std::move(values);
  return beta;
}

Strategy make_strategy(Player owner, std::map<NodePath, int> choices) {
  Strategy sigma;
  sigma.owner = owner;
  sigma.choices = std::move(choices);
  return sigma;
}

CorrespondenceMap pairs_of(std::vector<std::pair<std::string, std::string>>
                               texts) {
  CorrespondenceMap map;
  for (const auto& [source, target] : texts) {
    map.pairs.emplace_back(NodePath::parse(source), NodePath::parse(target));
  }
  return map;
}

bool conjunction_free(const ADTerm& t) {
  if (t.kind() == TermKind::And) return false;
  for (const ADTerm& c : t.children()) {
    if (!conjunction_free(c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fresh label scheme") {
  CHECK(FreshNames::v_label(NodePath{}) == "v");
  CHECK(FreshNames::v_label(NodePath{{0, 1}}) == "v.0.1");
  CHECK(FreshNames::u_leaf_label(NodePath{}) == "u");
  CHECK(FreshNames::u_leaf_label(NodePath{{0, 1}}) == "u.0.1");
  CHECK(FreshNames::u_choice_label(NodePath{}, 1) == "u.c1");
  CHECK(FreshNames::u_choice_label(NodePath{{0}}, 2) == "u.0.c2");
}

TEST_CASE("choice labels never collide with descendant leaf labels") {
  // A node at /0 with two choices and a losing leaf at /0/1 both mint
  // "u.0..."-prefixed labels; the c marker keeps them apart.
  const Game g = adtgame::parse_game("Np(No(Lp(1,0), Lp(0,1)))");
  const ADTerm t = adtgame::game_to_adterm(g).term;
  const std::vector<std::string> mine = labels(t, kP);
  const std::vector<std::string> theirs = labels(t, kO);
  std::vector<std::string> all(mine);
  all.insert(all.end(), theirs.begin(), theirs.end());
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("the two-move game translates to the expected term") {
  const Game g = adtgame::parse_game(kTwoMoveGameText);
  const auto [term, map] = adtgame::game_to_adterm(g);
  CHECK(adtgame::print_adterm(term) == kTwoMoveTermText);
  CHECK(validate(term).ok());
  CHECK(conjunction_free(term));
  CHECK(labels(term, kP) ==
        std::vector<std::string>{"u.c1", "u.0.0", "v.0.1", "u.c2"});
  CHECK(labels(term, kO) ==
        std::vector<std::string>{"u.0.c1", "v.0.0", "u.0.c2", "v.1"});

  const CorrespondenceMap expected = pairs_of({{"/", "/"},
                                               {"/0", "/0/1"},
                                               {"/0/0", "/0/1/0/1"},
                                               {"/0/1", "/0/1/1/1"},
                                               {"/1", "/1/1"}});
  CHECK(map == expected);
  CHECK(map.target_for(NodePath{{0, 1}}) == NodePath{{0, 1, 1, 1}});
  CHECK_FALSE(map.target_for(NodePath{{9}}).has_value());
}

TEST_CASE("game_to_adterm rejects invalid games") {
  CHECK_THROWS_AS(adtgame::game_to_adterm(Game::nonleaf(kP, {})),
                  ValidationError);
}

TEST_CASE("strategies become assignments over the owner's labels") {
  const Game g = adtgame::parse_game(kTwoMoveGameText);

  const BasicAssignment p_left = adtgame::strategy_to_assignment(
      make_strategy(kP, {{NodePath{}, 0}}), g);
  CHECK(p_left == assign(kP, {{"u.c1", true},
                              {"u.c2", false},
                              {"u.0.0", true},
                              {"v.0.1", true}}));

  const BasicAssignment p_right = adtgame::strategy_to_assignment(
      make_strategy(kP, {{NodePath{}, 1}}), g);
  CHECK(p_right == assign(kP, {{"u.c1", false},
                               {"u.c2", true},
                               {"u.0.0", true},
                               {"v.0.1", true}}));

  const BasicAssignment o_left = adtgame::strategy_to_assignment(
      make_strategy(kO, {{NodePath{{0}}, 0}}), g);
  CHECK(o_left == assign(kO, {{"u.0.c1", true},
                              {"u.0.c2", false},
                              {"v.0.0", true},
                              {"v.1", true}}));

  const BasicAssignment o_right = adtgame::strategy_to_assignment(
      make_strategy(kO, {{NodePath{{0}}, 1}}), g);
  CHECK(o_right == assign(kO, {{"u.0.c1", false},
                               {"u.0.c2", true},
                               {"v.0.0", true},
                               {"v.1", true}}));

  CHECK_THROWS_AS(
      adtgame::strategy_to_assignment(make_strategy(kP, {}), g),
      StrategyError);
}

TEST_CASE("profile outcomes match profile success through the translation") {
  const Game g = adtgame::parse_game(kTwoMoveGameText);
  const ADTerm t = adtgame::game_to_adterm(g).term;
  for (int i = 0; i < 2; ++i) {
    const Strategy sp = make_strategy(kP, {{NodePath{}, i}});
    for (int j = 0; j < 2; ++j) {
      const Strategy so = make_strategy(kO, {{NodePath{{0}}, j}});
      const bool wins = out_profile(g, adtgame::StrategyProfile(sp, so)) ==
                        Outcome::ProponentWins;
      const adtgame::BasicAssignmentProfile beta(
          adtgame::strategy_to_assignment(sp, g),
          adtgame::strategy_to_assignment(so, g));
      CHECK(successful_under_profile(t, beta, kP) == wins);
    }
  }
}

TEST_CASE("the worked example translates to the expected game") {
  const ADTerm t = adtgame::parse_adterm(kExampleTermText);
  const auto [game, map] = adtgame::adterm_to_game(t);
  CHECK(adtgame::print_game(game) == kExampleGameText);
  CHECK(validate_game(game).ok());
  // The term is unsatisfiable for p, so optimal play loses the game for p.
  CHECK(out(game) == Outcome::OpponentWins);

  const CorrespondenceMap expected = pairs_of({{"/", "/"},
                                               {"/0", "/0/0"},
                                               {"/0/0", "/0/0/0/0"},
                                               {"/0/1", "/0/0/1/0"},
                                               {"/1", "/1"},
                                               {"/1/0", "/1/0/0"}});
  CHECK(map == expected);

  // Each source node's image is moved by the opposite player and offers one
  // child per way of continuing at the source.
  for (const auto& [source, target] : map.pairs) {
    const ADTerm& sub = subterm_at(t, source);
    const Game& image = subgame_at(game, target);
    CHECK(image.mover() == opposite(sub.owner()));
  }
}

TEST_CASE("adterm_to_game rejects ill-typed terms") {
  const ADTerm bad =
      ADTerm::counter(kP, ADTerm::basic("G", kO), ADTerm::basic("E", kP));
  CHECK_THROWS_AS(adtgame::adterm_to_game(bad), ValidationError);
}

TEST_CASE("assignments become strategies on basic images") {
  const ADTerm t = ADTerm::basic("E", kP);
  const Game img = adtgame::adterm_to_game(t).game;
  const Strategy yes =
      adtgame::assignment_to_strategy(assign(kP, {{"E", true}}), t);
  CHECK(yes.choices == std::map<NodePath, int>{{NodePath{{0}}, 1}});
  const Strategy no =
      adtgame::assignment_to_strategy(assign(kP, {{"E", false}}), t);
  CHECK(no.choices == std::map<NodePath, int>{{NodePath{{0}}, 0}});
  CHECK(out_strategy(img, yes) == Outcome::ProponentWins);
  CHECK(out_strategy(img, no) == Outcome::OpponentWins);
}

TEST_CASE("assignments become strategies on the worked example") {
  const ADTerm t = adtgame::parse_adterm(kExampleTermText);
  const Game img = adtgame::adterm_to_game(t).game;

  const Strategy sigma_o =
      adtgame::assignment_to_strategy(assign(kO, {{"G", true}}), t);
  CHECK(sigma_o.owner == kO);
  CHECK(sigma_o.choices == std::map<NodePath, int>{{NodePath{}, 1},
                                                   {NodePath{{0, 0}}, 0},
                                                   {NodePath{{0, 0, 0, 0}}, 0},
                                                   {NodePath{{0, 0, 1, 0}}, 0},
                                                   {NodePath{{1, 0}}, 0},
                                                   {NodePath{{1, 0, 0, 0}}, 1}});
  CHECK(validate_strategy(img, sigma_o).ok());
  // G = true guarantees the term fails for p, so the plan forces the win.
  CHECK(out_strategy(img, sigma_o) == Outcome::OpponentWins);

  const Strategy weak_o =
      adtgame::assignment_to_strategy(assign(kO, {{"G", false}}), t);
  CHECK(out_strategy(img, weak_o) == Outcome::ProponentWins);

  CHECK_THROWS_AS(adtgame::assignment_to_strategy(assign(kO, {}), t),
                  EvalError);
}

TEST_CASE("an opposing counter takes the countermeasure branch exactly when "
          "it is guaranteed") {
  const ADTerm t = adtgame::parse_adterm("and_o(c_o(A, X), B)");
  const Game img = adtgame::adterm_to_game(t).game;
  // X is the proponent's only lever: guaranteeing it steers the image of the
  // counter into the countermeasure branch and wins.
  const Strategy sigma_p =
      adtgame::assignment_to_strategy(assign(kP, {{"X", true}}), t);
  CHECK(sigma_p.choices == std::map<NodePath, int>{{NodePath{}, 0},
                                                   {NodePath{{0, 0}}, 1},
                                                   {NodePath{{0, 0, 0, 0}}, 0},
                                                   {NodePath{{0, 0, 1, 0}}, 1},
                                                   {NodePath{{1, 0}}, 0}});
  CHECK(out_strategy(img, sigma_p) == Outcome::ProponentWins);

  const Strategy weak_p =
      adtgame::assignment_to_strategy(assign(kP, {{"X", false}}), t);
  CHECK(weak_p.choices.at(NodePath{{0, 0}}) == 0);
  CHECK(out_strategy(img, weak_p) == Outcome::OpponentWins);
}

TEST_CASE("forced choices on an owned conjunction") {
  const ADTerm t = adtgame::parse_adterm("and_o(A, B)");
  const Strategy sigma_o =
      adtgame::assignment_to_strategy(assign(kO, {{"A", true}, {"B", false}}),
                                      t);
  CHECK(sigma_o.choices == std::map<NodePath, int>{{NodePath{{0}}, 0},
                                                   {NodePath{{1}}, 0},
                                                   {NodePath{{0, 0, 0}}, 1},
                                                   {NodePath{{1, 0, 0}}, 0}});
  const Game img = adtgame::adterm_to_game(t).game;
  // B = false does not guarantee the conjunction, and indeed the proponent's
  // best reply steers into B's failing image.
  CHECK(out_strategy(img, sigma_o) == Outcome::ProponentWins);
  CHECK_FALSE(successful_under_assignment(t, assign(kO, {{"A", true},
                                                         {"B", false}}),
                                          kO));
}

TEST_CASE("a free disjunction choice picks the first guaranteed child") {
  const ADTerm t = adtgame::parse_adterm("or_p(E, F)");
  const Strategy f_only = adtgame::assignment_to_strategy(
      assign(kP, {{"E", false}, {"F", true}}), t);
  CHECK(f_only.choices.at(NodePath{{0}}) == 1);
  const Strategy neither = adtgame::assignment_to_strategy(
      assign(kP, {{"E", false}, {"F", false}}), t);
  CHECK(neither.choices.at(NodePath{{0}}) == 0);
  const Strategy both = adtgame::assignment_to_strategy(
      assign(kP, {{"E", true}, {"F", true}}), t);
  CHECK(both.choices.at(NodePath{{0}}) == 0);
}

TEST_CASE("guaranteeing assignments translate to winning plans both ways") {
  adtgame::GenConfig cfg;
  cfg.max_depth = 3;
  cfg.budget = 512;
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    cfg.seed = seed;
    const ADTerm t = adtgame::gen_adterm(cfg);
    const Game img = adtgame::adterm_to_game(t).game;
    for (Player s : {kP, kO}) {
      adtgame::AssignmentEnumerator en(labels(t, s), s);
      for (std::uint64_t i = 0; i < en.size(); ++i) {
        const BasicAssignment beta = en.at(i);
        const Strategy sigma = adtgame::assignment_to_strategy(beta, t);
        CHECK(validate_strategy(img, sigma).ok());
        CHECK(successful_under_assignment(t, beta, s) ==
              (out_strategy(img, sigma) == adtgame::win_for(s)));
      }
    }
  }
}

TEST_CASE("satisfiability survives the round trip but syntax does not") {
  const ADTerm t = adtgame::parse_adterm("and_p(A, B)");
  const Game img = adtgame::adterm_to_game(t).game;
  const ADTerm back = adtgame::game_to_adterm(img).term;
  CHECK(satisfiable_for(t, kP).has_value());
  CHECK(out(img) == Outcome::ProponentWins);
  CHECK(satisfiable_for(back, kP).has_value());
  CHECK(back != t);
  CHECK(conjunction_free(back));
}
