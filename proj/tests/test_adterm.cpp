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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "adtgame/adterm.hpp"
#include "adtgame/dsl.hpp"
#include "adtgame/verify.hpp"

namespace {

using adtgame::ADTerm;
using adtgame::AssignmentEnumerator;
using adtgame::BasicAssignment;
using adtgame::BasicAssignmentProfile;
using adtgame::EvalError;
using adtgame::LimitError;
using adtgame::Player;
using adtgame::TermKind;

constexpr Player kP = Player::Proponent;
constexpr Player kO = Player::Opponent;

ADTerm example_term() {
  // c_p(and_p(E, F), or_o(G))
  std::vector<ADTerm> conj;
  conj.push_back(ADTerm::basic("E", kP));
  conj.push_back(ADTerm::basic("F", kP));
  std::vector<ADTerm> disj;
  disj.push_back(ADTerm::basic("G", kO));
  return ADTerm::counter(kP, ADTerm::conjunction(kP, std::move(conj)),
                         ADTerm::disjunction(kO, std::move(disj)));
}

BasicAssignment assign(Player owner,
                       std::map<std::string, bool> values) {
  BasicAssignment beta;
  beta.owner = owner;
  beta.values = std::move(values);
  return beta;
}

// A second opinion on sat, written directly against the truth tables and a
// plain map lookup instead of the library's node walk.
bool eval_oracle(const ADTerm& t,
                 const std::map<std::pair<char, std::string>, bool>& table) {
  const char who = adtgame::player_char(t.owner());
  switch (t.kind()) {
    case TermKind::Basic:
      return table.at({who, t.label()});
    case TermKind::Or: {
      bool any = false;
      for (const ADTerm& c : t.children()) any = eval_oracle(c, table) || any;
      return any;
    }
    case TermKind::And: {
      bool all = true;
      for (const ADTerm& c : t.children()) all = eval_oracle(c, table) && all;
      return all;
    }
    case TermKind::Counter:
      return eval_oracle(t.children()[0], table) &&
             !eval_oracle(t.children()[1], table);
  }
  return false;
}

void collect_labels(const ADTerm& t, Player s, std::vector<std::string>& out,
                    std::set<std::string>& seen) {
  if (t.kind() == TermKind::Basic) {
    if (t.owner() == s && seen.insert(t.label()).second) {
      out.push_back(t.label());
    }
    return;
  }
  for (const ADTerm& c : t.children()) collect_labels(c, s, out, seen);
}

std::vector<std::string> labels_oracle(const ADTerm& t, Player s) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_labels(t, s, out, seen);
  return out;
}

}  // namespace

TEST_CASE("construction and accessors") {
  const ADTerm e = ADTerm::basic("E", kP);
  CHECK(e.kind() == TermKind::Basic);
  CHECK(e.owner() == kP);
  CHECK(e.label() == "E");
  CHECK(e.children().empty());
  CHECK(adtgame::type_of(e) == kP);

  const ADTerm t = example_term();
  CHECK(t.kind() == TermKind::Counter);
  CHECK(adtgame::type_of(t) == kP);
  REQUIRE(t.children().size() == 2);
  CHECK(t.children()[0].kind() == TermKind::And);
  CHECK(t.children()[1].kind() == TermKind::Or);
  CHECK(t.children()[1].owner() == kO);
  CHECK(t.node_count() == 6);
  CHECK(t.internal_node_count() == 3);
}

TEST_CASE("structural equality") {
  CHECK(example_term() == example_term());
  CHECK(ADTerm::basic("E", kP) != ADTerm::basic("E", kO));
  CHECK(ADTerm::basic("E", kP) != ADTerm::basic("F", kP));
  const std::vector<ADTerm> one = {ADTerm::basic("E", kP)};
  CHECK(ADTerm::disjunction(kP, one) != ADTerm::conjunction(kP, one));
  const ADTerm shared = example_term();
  CHECK(shared == shared);
}

TEST_CASE("subterm_at resolves paths") {
  const ADTerm t = example_term();
  CHECK(subterm_at(t, adtgame::NodePath{}) == t);
  CHECK(subterm_at(t, adtgame::NodePath{{0, 1}}) == ADTerm::basic("F", kP));
  CHECK(subterm_at(t, adtgame::NodePath{{1, 0}}) == ADTerm::basic("G", kO));
  CHECK_THROWS_AS(subterm_at(t, adtgame::NodePath{{2}}), EvalError);
  CHECK_THROWS_AS(subterm_at(t, adtgame::NodePath{{0, 0, 0}}), EvalError);
}

TEST_CASE("validate accepts well-typed terms") {
  CHECK(validate(example_term()).ok());
  CHECK(validate(ADTerm::basic("E", kO)).ok());
  CHECK(validate(example_term()).to_string() == "ok");
}

TEST_CASE("validate reports mistyped gate children") {
  std::vector<ADTerm> mixed;
  mixed.push_back(ADTerm::basic("E", kP));
  mixed.push_back(ADTerm::basic("G", kO));
  const auto report = validate(ADTerm::conjunction(kP, std::move(mixed)));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].path.to_string() == "/1");
  CHECK(report.violations[0].message ==
        "child of a proponent conjunction must be proponent-typed");
}

TEST_CASE("validate reports both sides of a mistyped counter") {
  const auto report = validate(
      ADTerm::counter(kP, ADTerm::basic("G", kO), ADTerm::basic("E", kP)));
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].path.to_string() == "/0");
  CHECK(report.violations[0].message ==
        "claim of a proponent counter must be proponent-typed");
  CHECK(report.violations[1].path.to_string() == "/1");
  CHECK(report.violations[1].message ==
        "countermeasure of a proponent counter must be opponent-typed");
}

TEST_CASE("validate reports nullary gates") {
  const auto report = validate(ADTerm::disjunction(kP, {}));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].path.to_string() == "/");
  const auto nested = validate(ADTerm::counter(
      kO, ADTerm::conjunction(kO, {}), ADTerm::basic("E", kP)));
  REQUIRE(nested.violations.size() == 1);
  CHECK(nested.violations[0].path.to_string() == "/0");
}

TEST_CASE("labels are per player in preorder of first occurrence") {
  const ADTerm t = example_term();
  CHECK(labels(t, kP) == std::vector<std::string>{"E", "F"});
  CHECK(labels(t, kO) == std::vector<std::string>{"G"});

  std::vector<ADTerm> repeats;
  repeats.push_back(ADTerm::basic("F", kP));
  repeats.push_back(ADTerm::basic("E", kP));
  repeats.push_back(ADTerm::basic("F", kP));
  const ADTerm r = ADTerm::disjunction(kP, std::move(repeats));
  CHECK(labels(r, kP) == std::vector<std::string>{"F", "E"});

  // The same name under both owners names two different actions.
  const ADTerm both =
      ADTerm::counter(kP, ADTerm::basic("X", kP), ADTerm::basic("X", kO));
  CHECK(labels(both, kP) == std::vector<std::string>{"X"});
  CHECK(labels(both, kO) == std::vector<std::string>{"X"});
}

TEST_CASE("sat on the worked example") {
  const ADTerm t = example_term();
  const BasicAssignmentProfile beta(
      assign(kP, {{"E", true}, {"F", true}}), assign(kO, {{"G", false}}));
  CHECK(sat(t, beta));
  CHECK(successful_under_profile(t, beta, kP));
  CHECK_FALSE(successful_under_profile(t, beta, kO));
}

TEST_CASE("sat truth table matches the oracle") {
  const ADTerm t = example_term();
  for (int mask = 0; mask < 8; ++mask) {
    const bool e = (mask & 4) != 0;
    const bool f = (mask & 2) != 0;
    const bool g = (mask & 1) != 0;
    const BasicAssignmentProfile beta(assign(kP, {{"E", e}, {"F", f}}),
                                      assign(kO, {{"G", g}}));
    const bool expected = (e && f) && !g;
    CHECK(sat(t, beta) == expected);
    CHECK(sat(t, beta) ==
          eval_oracle(t, {{{'p', "E"}, e}, {{'p', "F"}, f}, {{'o', "G"}, g}}));
    // Exactly one player is successful under every full profile.
    CHECK(successful_under_profile(t, beta, kP) !=
          successful_under_profile(t, beta, kO));
  }
}

TEST_CASE("sat reports the first uncovered leaf in preorder") {
  std::vector<ADTerm> pair;
  pair.push_back(ADTerm::basic("E", kP));
  pair.push_back(ADTerm::basic("F", kP));
  const ADTerm t = ADTerm::disjunction(kP, std::move(pair));
  const BasicAssignmentProfile only_f(assign(kP, {{"F", true}}),
                                      assign(kO, {}));
  CHECK_THROWS_WITH_AS(sat(t, only_f), "no value for label 'E' of player p",
                       EvalError);

  const BasicAssignmentProfile empty;
  CHECK_THROWS_AS(sat(ADTerm::disjunction(kP, {}), empty), EvalError);
  CHECK_THROWS_AS(sat(ADTerm::conjunction(kO, {}), empty), EvalError);
}

TEST_CASE("profile constructor insists on matching owners") {
  CHECK_THROWS_AS(BasicAssignmentProfile(assign(kO, {}), assign(kO, {})),
                  EvalError);
  CHECK_THROWS_AS(BasicAssignmentProfile(assign(kP, {}), assign(kP, {})),
                  EvalError);
  const BasicAssignmentProfile ok(assign(kP, {}), assign(kO, {}));
  CHECK(ok.for_player(kO).owner == kO);
}

TEST_CASE("successful_under_assignment quantifies over the other player") {
  const ADTerm t = example_term();
  // The opponent can always set G and break the conjunction.
  CHECK_FALSE(successful_under_assignment(
      t, assign(kP, {{"E", true}, {"F", true}}), kP));
  // G = true makes sat false no matter what the proponent does.
  CHECK(successful_under_assignment(t, assign(kO, {{"G", true}}), kO));
  CHECK_FALSE(successful_under_assignment(t, assign(kO, {{"G", false}}), kO));
  CHECK_THROWS_AS(successful_under_assignment(t, assign(kO, {{"G", true}}), kP),
                  EvalError);
}

TEST_CASE("successful_under_assignment against a brute-force oracle") {
  adtgame::GenConfig cfg;
  cfg.max_depth = 3;
  cfg.budget = 256;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    cfg.seed = seed;
    const ADTerm t = adtgame::gen_adterm(cfg);
    const std::vector<std::string> mine = labels_oracle(t, kP);
    const std::vector<std::string> theirs = labels_oracle(t, kO);
    REQUIRE(mine == labels(t, kP));
    REQUIRE(theirs == labels(t, kO));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << mine.size()); ++i) {
      std::map<std::string, bool> p_values;
      for (std::size_t b = 0; b < mine.size(); ++b) {
        p_values[mine[b]] = ((i >> b) & 1) != 0;
      }
      bool oracle = true;
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << theirs.size());
           ++j) {
        std::map<std::pair<char, std::string>, bool> table;
        std::map<std::string, bool> o_values;
        for (const auto& [name, value] : p_values) table[{'p', name}] = value;
        for (std::size_t b = 0; b < theirs.size(); ++b) {
          table[{'o', theirs[b]}] = ((j >> b) & 1) != 0;
          o_values[theirs[b]] = ((j >> b) & 1) != 0;
        }
        const bool value = eval_oracle(t, table);
        const bool succeeded = value == (adtgame::type_of(t) == kP);
        oracle = oracle && succeeded;
        const BasicAssignmentProfile beta(assign(kP, p_values),
                                          assign(kO, o_values));
        REQUIRE(sat(t, beta) == value);
      }
      CHECK(successful_under_assignment(t, assign(kP, p_values), kP) ==
            oracle);
    }
  }
}

TEST_CASE("assignment enumeration order is lexicographic, false first") {
  AssignmentEnumerator en({"E", "F"}, kP);
  REQUIRE(en.size() == 4);
  CHECK(en.at(0) == assign(kP, {{"E", false}, {"F", false}}));
  CHECK(en.at(1) == assign(kP, {{"E", false}, {"F", true}}));
  CHECK(en.at(2) == assign(kP, {{"E", true}, {"F", false}}));
  CHECK(en.at(3) == assign(kP, {{"E", true}, {"F", true}}));

  AssignmentEnumerator empty({}, kO);
  CHECK(empty.size() == 1);
  CHECK(empty.at(0) == assign(kO, {}));
}

TEST_CASE("assignment enumeration is capped at 63 labels") {
  std::vector<std::string> many;
  for (int i = 0; i < 64; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(AssignmentEnumerator(many, kP), LimitError);
}

TEST_CASE("satisfiable_for returns the first guaranteeing assignment") {
  const ADTerm t = example_term();
  CHECK_FALSE(satisfiable_for(t, kP).has_value());
  const auto witness = satisfiable_for(t, kO);
  REQUIRE(witness.has_value());
  CHECK(*witness == assign(kO, {{"G", true}}));

  // With E before F in enumeration order, {E:false, F:true} precedes
  // {E:true, F:false}.
  std::vector<ADTerm> pair;
  pair.push_back(ADTerm::basic("E", kP));
  pair.push_back(ADTerm::basic("F", kP));
  const ADTerm choice = ADTerm::disjunction(kP, std::move(pair));
  const auto first = satisfiable_for(choice, kP);
  REQUIRE(first.has_value());
  CHECK(*first == assign(kP, {{"E", false}, {"F", true}}));
}

TEST_CASE("satisfiability of generated terms agrees with brute force") {
  adtgame::GenConfig cfg;
  cfg.max_depth = 3;
  cfg.budget = 256;
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    cfg.seed = seed;
    const ADTerm t = adtgame::gen_adterm(cfg);
    for (Player s : {kP, kO}) {
      const std::vector<std::string> mine = labels(t, s);
      bool expected = false;
      AssignmentEnumerator en(mine, s);
      for (std::uint64_t i = 0; i < en.size() && !expected; ++i) {
        expected = successful_under_assignment(t, en.at(i), s);
      }
      CHECK(satisfiable_for(t, s).has_value() == expected);
    }
  }
}
