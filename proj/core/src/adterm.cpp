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

#include "adtgame/adterm.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace adtgame {

ADTerm ADTerm::basic(std::string label, Player owner) {
  return ADTerm(std::make_shared<const Node>(
      Node{TermKind::Basic, owner, std::move(label), {}}));
}

ADTerm ADTerm::disjunction(Player owner, std::vector<ADTerm> children) {
  return ADTerm(std::make_shared<const Node>(
      Node{TermKind::Or, owner, {}, std::move(children)}));
}

ADTerm ADTerm::conjunction(Player owner, std::vector<ADTerm> children) {
  return ADTerm(std::make_shared<const Node>(
      Node{TermKind::And, owner, {}, std::move(children)}));
}

ADTerm ADTerm::counter(Player owner, ADTerm claim, ADTerm countermeasure) {
  std::vector<ADTerm> children;
  children.reserve(2);
  children.push_back(std::move(claim));
  children.push_back(std::move(countermeasure));
  return ADTerm(std::make_shared<const Node>(
      Node{TermKind::Counter, owner, {}, std::move(children)}));
}

bool ADTerm::operator==(const ADTerm& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->owner != other.node_->owner)
    return false;
  if (node_->kind == TermKind::Basic) return node_->label == other.node_->label;
  return node_->children == other.node_->children;
}

std::size_t ADTerm::node_count() const {
  std::size_t n = 1;
  for (const ADTerm& c : children()) n += c.node_count();
  return n;
}

std::size_t ADTerm::internal_node_count() const {
  if (kind() == TermKind::Basic) return 0;
  std::size_t n = 1;
  for (const ADTerm& c : children()) n += c.internal_node_count();
  return n;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string s;
  for (const Violation& v : violations) {
    if (!s.empty()) s += '\n';
    s += "error at " + v.path.to_string() + ": " + v.message;
  }
  return s;
}

namespace {

void validate_rec(const ADTerm& t, NodePath& path, ValidationReport& report) {
  switch (t.kind()) {
    case TermKind::Basic:
      break;
    case TermKind::Or:
    case TermKind::And: {
      const char* head = t.kind() == TermKind::Or ? "disjunction" : "conjunction";
      if (t.children().empty()) {
        report.violations.push_back(
            {path, std::string(head) + " needs at least one child"});
      }
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (type_of(t.children()[i]) != t.owner()) {
          report.violations.push_back(
              {path.child(static_cast<int>(i)),
               std::string("child of a ") + player_name(t.owner()) + " " +
                   head + " must be " + player_name(t.owner()) + "-typed"});
        }
      }
      break;
    }
    case TermKind::Counter: {
      if (type_of(t.children()[0]) != t.owner()) {
        report.violations.push_back(
            {path.child(0), std::string("claim of a ") + player_name(t.owner()) +
                                " counter must be " + player_name(t.owner()) +
                                "-typed"});
      }
      if (type_of(t.children()[1]) != opposite(t.owner())) {
        report.violations.push_back(
            {path.child(1), std::string("countermeasure of a ") +
                                player_name(t.owner()) + " counter must be " +
                                player_name(opposite(t.owner())) + "-typed"});
      }
      break;
    }
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    path.steps.push_back(static_cast<int>(i));
    validate_rec(t.children()[i], path, report);
    path.steps.pop_back();
  }
}

}  // namespace

ValidationReport validate(const ADTerm& t) {
  ValidationReport report;
  NodePath path;
  validate_rec(t, path, report);
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.path < b.path;
                   });
  return report;
}

const ADTerm& subterm_at(const ADTerm& t, const NodePath& path) {
  const ADTerm* cur = &t;
  for (int step : path.steps) {
    auto kids = cur->children();
    if (step < 0 || static_cast<std::size_t>(step) >= kids.size()) {
      throw EvalError("no subterm at path " + path.to_string());
    }
    cur = &kids[static_cast<std::size_t>(step)];
  }
  return *cur;
}

BasicAssignmentProfile::BasicAssignmentProfile() {
  for_proponent.owner = Player::Proponent;
  for_opponent.owner = Player::Opponent;
}

BasicAssignmentProfile::BasicAssignmentProfile(BasicAssignment p,
                                               BasicAssignment o)
    : for_proponent(std::move(p)), for_opponent(std::move(o)) {
  if (for_proponent.owner != Player::Proponent ||
      for_opponent.owner != Player::Opponent) {
    throw EvalError("profile sides must be owned by p and o respectively");
  }
}

namespace {

void labels_rec(const ADTerm& t, Player s, std::set<std::string>& seen,
                std::vector<std::string>& out) {
  if (t.kind() == TermKind::Basic) {
    if (t.owner() == s && seen.insert(t.label()).second)
      out.push_back(t.label());
    return;
  }
  for (const ADTerm& c : t.children()) labels_rec(c, s, seen, out);
}

// Full evaluation without short-circuiting, so coverage problems surface at
// the first uncovered leaf in preorder.
bool sat_rec(const ADTerm& t, const BasicAssignmentProfile& beta) {
  switch (t.kind()) {
    case TermKind::Basic: {
      const BasicAssignment& mine = beta.for_player(t.owner());
      auto it = mine.values.find(t.label());
      if (it == mine.values.end()) {
        throw EvalError(std::string("no value for label '") + t.label() +
                        "' of player " + player_char(t.owner()));
      }
      return it->second;
    }
    case TermKind::Or: {
      if (t.children().empty()) throw EvalError("nullary disjunction");
      bool v = false;
      for (const ADTerm& c : t.children()) v = sat_rec(c, beta) || v;
      return v;
    }
    case TermKind::And: {
      if (t.children().empty()) throw EvalError("nullary conjunction");
      bool v = true;
      for (const ADTerm& c : t.children()) v = sat_rec(c, beta) && v;
      return v;
    }
    case TermKind::Counter: {
      const bool claim = sat_rec(t.children()[0], beta);
      const bool countered = sat_rec(t.children()[1], beta);
      return claim && !countered;
    }
  }
  throw EvalError("corrupt term");
}

}  // namespace

std::vector<std::string> labels(const ADTerm& t, Player s) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  labels_rec(t, s, seen, out);
  return out;
}

bool sat(const ADTerm& t, const BasicAssignmentProfile& beta) {
  return sat_rec(t, beta);
}

bool successful_under_profile(const ADTerm& t,
                              const BasicAssignmentProfile& beta, Player s) {
  return sat(t, beta) == (type_of(t) == s);
}

AssignmentEnumerator::AssignmentEnumerator(std::vector<std::string> labels,
                                           Player owner)
    : labels_(std::move(labels)), owner_(owner) {
  if (labels_.size() > 63) {
    throw LimitError("too many labels to enumerate (" +
                     std::to_string(labels_.size()) + ")");
  }
}

BasicAssignment AssignmentEnumerator::at(std::uint64_t index) const {
  BasicAssignment beta;
  beta.owner = owner_;
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    beta.values[labels_[i]] = ((index >> (n - 1 - i)) & 1) != 0;
  }
  return beta;
}

bool successful_under_assignment(const ADTerm& t,
                                 const BasicAssignment& beta_s, Player s) {
  if (beta_s.owner != s) {
    throw EvalError("assignment owner does not match the requested player");
  }
  AssignmentEnumerator others(labels(t, opposite(s)), opposite(s));
  for (std::uint64_t i = 0; i < others.size(); ++i) {
    BasicAssignmentProfile beta =
        s == Player::Proponent
            ? BasicAssignmentProfile(beta_s, others.at(i))
            : BasicAssignmentProfile(others.at(i), beta_s);
    if (!successful_under_profile(t, beta, s)) return false;
  }
  return true;
}

std::optional<BasicAssignment> satisfiable_for(const ADTerm& t, Player s) {
  AssignmentEnumerator mine(labels(t, s), s);
  for (std::uint64_t i = 0; i < mine.size(); ++i) {
    BasicAssignment candidate = mine.at(i);
    if (successful_under_assignment(t, candidate, s)) return candidate;
  }
  return std::nullopt;
}

}  // namespace adtgame
