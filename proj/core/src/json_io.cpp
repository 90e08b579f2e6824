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

#include "adtgame/json_io.hpp"

#include <utility>

#include <json.hpp>

#include "adtgame/dsl.hpp"

namespace adtgame {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON", 0);
  return j;
}

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ParseError(std::string("expected string field \"") + field + "\"",
                     0);
  }
  return j[field].get<std::string>();
}

Player player_field(const json& j, const char* field) {
  const std::string s = require_string(j, field);
  const std::optional<Player> who =
      s.size() == 1 ? player_from_char(s[0]) : std::nullopt;
  if (!who) {
    throw ParseError(std::string("field \"") + field + "\" must be p or o",
                     0);
  }
  return *who;
}

const json& require_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw ParseError(std::string("expected array field \"") + field + "\"",
                     0);
  }
  return j[field];
}

const json& require_object(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_object()) {
    throw ParseError(std::string("expected object field \"") + field + "\"",
                     0);
  }
  return j[field];
}

ordered_json term_tree(const ADTerm& t) {
  ordered_json j;
  switch (t.kind()) {
    case TermKind::Basic:
      j["kind"] = "basic";
      j["owner"] = std::string(1, player_char(t.owner()));
      j["label"] = t.label();
      return j;
    case TermKind::Or:
    case TermKind::And: {
      j["kind"] = t.kind() == TermKind::Or ? "or" : "and";
      j["owner"] = std::string(1, player_char(t.owner()));
      ordered_json children = ordered_json::array();
      for (const ADTerm& c : t.children()) children.push_back(term_tree(c));
      j["children"] = std::move(children);
      return j;
    }
    case TermKind::Counter:
      j["kind"] = "counter";
      j["owner"] = std::string(1, player_char(t.owner()));
      j["claim"] = term_tree(t.children()[0]);
      j["countermeasure"] = term_tree(t.children()[1]);
      return j;
  }
  throw EvalError("unreachable term kind");
}

ADTerm term_from_tree(const json& j) {
  if (!j.is_object()) throw ParseError("term node must be an object", 0);
  const std::string kind = require_string(j, "kind");
  const Player owner = player_field(j, "owner");
  if (kind == "basic") {
    return ADTerm::basic(require_string(j, "label"), owner);
  }
  if (kind == "or" || kind == "and") {
    std::vector<ADTerm> children;
    for (const json& c : require_array(j, "children")) {
      children.push_back(term_from_tree(c));
    }
    return kind == "or" ? ADTerm::disjunction(owner, std::move(children))
                        : ADTerm::conjunction(owner, std::move(children));
  }
  if (kind == "counter") {
    if (!j.contains("claim") || !j.contains("countermeasure")) {
      throw ParseError("counter needs \"claim\" and \"countermeasure\"", 0);
    }
    return ADTerm::counter(owner, term_from_tree(j["claim"]),
                           term_from_tree(j["countermeasure"]));
  }
  throw ParseError("unknown term kind \"" + kind + "\"", 0);
}

ordered_json game_tree(const Game& g) {
  ordered_json j;
  if (g.kind() == GameKind::Leaf) {
    j["kind"] = "leaf";
    j["mover"] = std::string(1, player_char(g.mover()));
    j["outcome"] = outcome_text(g.outcome());
    return j;
  }
  j["kind"] = "nonleaf";
  j["mover"] = std::string(1, player_char(g.mover()));
  ordered_json children = ordered_json::array();
  for (const Game& c : g.children()) children.push_back(game_tree(c));
  j["children"] = std::move(children);
  return j;
}

Game game_from_tree(const json& j) {
  if (!j.is_object()) throw ParseError("game node must be an object", 0);
  const std::string kind = require_string(j, "kind");
  const Player mover = player_field(j, "mover");
  if (kind == "leaf") {
    return Game::leaf(mover, parse_outcome(require_string(j, "outcome")));
  }
  if (kind == "nonleaf") {
    std::vector<Game> children;
    for (const json& c : require_array(j, "children")) {
      children.push_back(game_from_tree(c));
    }
    return Game::nonleaf(mover, std::move(children));
  }
  throw ParseError("unknown game kind \"" + kind + "\"", 0);
}

ordered_json assignment_tree(const BasicAssignment& beta) {
  ordered_json j;
  j["owner"] = std::string(1, player_char(beta.owner));
  ordered_json values = ordered_json::object();
  for (const auto& [label, value] : beta.values) values[label] = value;
  j["values"] = std::move(values);
  return j;
}

BasicAssignment assignment_from_tree(const json& j) {
  if (!j.is_object()) throw ParseError("assignment must be an object", 0);
  BasicAssignment beta;
  beta.owner = player_field(j, "owner");
  for (const auto& [label, value] : require_object(j, "values").items()) {
    if (!value.is_boolean()) {
      throw ParseError("value of \"" + label + "\" must be a boolean", 0);
    }
    beta.values[label] = value.get<bool>();
  }
  return beta;
}

}  // namespace

std::string adterm_to_json(const ADTerm& t) { return term_tree(t).dump(); }

ADTerm adterm_from_json(const std::string& text) {
  return term_from_tree(parse_or_throw(text));
}

std::string game_to_json(const Game& g) { return game_tree(g).dump(); }

Game game_from_json(const std::string& text) {
  return game_from_tree(parse_or_throw(text));
}

std::string assignment_to_json(const BasicAssignment& beta) {
  return assignment_tree(beta).dump();
}

BasicAssignment assignment_from_json(const std::string& text) {
  return assignment_from_tree(parse_or_throw(text));
}

std::string assignment_profile_to_json(const BasicAssignmentProfile& beta) {
  ordered_json j;
  j["for_proponent"] = assignment_tree(beta.for_proponent);
  j["for_opponent"] = assignment_tree(beta.for_opponent);
  return j.dump();
}

BasicAssignmentProfile assignment_profile_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("for_proponent") ||
      !j.contains("for_opponent")) {
    throw ParseError(
        "profile needs \"for_proponent\" and \"for_opponent\"", 0);
  }
  try {
    return BasicAssignmentProfile(assignment_from_tree(j["for_proponent"]),
                                  assignment_from_tree(j["for_opponent"]));
  } catch (const EvalError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string strategy_to_json(const Strategy& sigma) {
  ordered_json j;
  j["owner"] = std::string(1, player_char(sigma.owner));
  ordered_json choices = ordered_json::object();
  for (const auto& [path, index] : sigma.choices) {
    choices[path.to_string()] = index;
  }
  j["choices"] = std::move(choices);
  return j.dump();
}

Strategy strategy_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object()) throw ParseError("strategy must be an object", 0);
  Strategy sigma;
  sigma.owner = player_field(j, "owner");
  for (const auto& [key, value] : require_object(j, "choices").items()) {
    if (!value.is_number_unsigned()) {
      throw ParseError("choice at \"" + key +
                           "\" must be a nonnegative integer",
                       0);
    }
    sigma.choices[NodePath::parse(key)] = value.get<int>();
  }
  return sigma;
}

std::string correspondence_to_json(const CorrespondenceMap& map) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [source, target] : map.pairs) {
    ordered_json entry;
    entry["source"] = source.to_string();
    entry["target"] = target.to_string();
    pairs.push_back(std::move(entry));
  }
  ordered_json j;
  j["pairs"] = std::move(pairs);
  return j.dump();
}

CorrespondenceMap correspondence_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object()) throw ParseError("correspondence must be an object", 0);
  CorrespondenceMap map;
  for (const json& entry : require_array(j, "pairs")) {
    if (!entry.is_object()) {
      throw ParseError("correspondence pairs must be objects", 0);
    }
    map.pairs.emplace_back(NodePath::parse(require_string(entry, "source")),
                           NodePath::parse(require_string(entry, "target")));
  }
  return map;
}

std::string report_to_json(const CheckReport& report) {
  ordered_json j;
  j["check"] = report.check_name;
  ordered_json cfg;
  cfg["seed"] = report.config.seed;
  cfg["max_depth"] = report.config.max_depth;
  cfg["max_arity"] = report.config.max_arity;
  cfg["max_basic_actions"] = report.config.max_basic_actions;
  cfg["instance_count"] = report.config.instance_count;
  cfg["budget"] = report.config.budget;
  cfg["max_internal_nodes"] = report.config.max_internal_nodes;
  j["config"] = std::move(cfg);
  j["instances_tried"] = report.instances_tried;
  j["ok"] = !report.counterexample.has_value();
  if (report.counterexample) {
    ordered_json ce;
    ce["instance"] = report.counterexample->instance;
    ce["detail"] = report.counterexample->detail;
    j["counterexample"] = std::move(ce);
  }
  if (report.witness) j["witness"] = *report.witness;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump();
}

}  // namespace adtgame
