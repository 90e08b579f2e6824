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

#ifndef ADTGAME_ADTERM_HPP_
#define ADTGAME_ADTERM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adtgame/errors.hpp"
#include "adtgame/path.hpp"
#include "adtgame/player.hpp"

namespace adtgame {

enum class TermKind : std::uint8_t {
  Basic,    // a named basic action of its owner
  Or,       // the owner succeeds in at least one child
  And,      // the owner succeeds in every child
  Counter,  // children[0] succeeds and children[1] (the other player's
            // countermeasure) fails
};

// An immutable attack-defense term. Values share structure freely; copying
// is cheap. Factories do not type-check (see validate), so reports can point
// at ill-typed nodes instead of refusing to build them.
class ADTerm {
 public:
  static ADTerm basic(std::string label, Player owner);
  static ADTerm disjunction(Player owner, std::vector<ADTerm> children);
  static ADTerm conjunction(Player owner, std::vector<ADTerm> children);
  static ADTerm counter(Player owner, ADTerm claim, ADTerm countermeasure);

  TermKind kind() const { return node_->kind; }
  Player owner() const { return node_->owner; }

  // Only meaningful for TermKind::Basic.
  const std::string& label() const { return node_->label; }

  // Empty for Basic; [claim, countermeasure] for Counter.
  std::span<const ADTerm> children() const { return node_->children; }

  bool operator==(const ADTerm& other) const;
  bool operator!=(const ADTerm& other) const { return !(*this == other); }

  std::size_t node_count() const;
  std::size_t internal_node_count() const;

 private:
  struct Node {
    TermKind kind;
    Player owner;
    std::string label;
    std::vector<ADTerm> children;
  };

  explicit ADTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// The type of a term is the player owning its root constructor.
inline Player type_of(const ADTerm& t) { return t.owner(); }

struct Violation {
  NodePath path;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks the typing discipline everywhere: gates take at least one child of
// the gate's own type, and a counter of player s pairs an s-typed claim with
// an opposite-typed countermeasure.
ValidationReport validate(const ADTerm& t);

// Resolves a path inside a term. Throws EvalError on a dangling path.
const ADTerm& subterm_at(const ADTerm& t, const NodePath& path);

// Truth values one player gives to basic actions. Two occurrences of the
// same label with the same owner denote the same action; the same label
// under different owners denotes two unrelated actions.
struct BasicAssignment {
  Player owner = Player::Proponent;
  std::map<std::string, bool> values;

  bool operator==(const BasicAssignment&) const = default;
};

struct BasicAssignmentProfile {
  BasicAssignment for_proponent;
  BasicAssignment for_opponent;

  BasicAssignmentProfile();
  BasicAssignmentProfile(BasicAssignment p, BasicAssignment o);

  const BasicAssignment& for_player(Player s) const {
    return s == Player::Proponent ? for_proponent : for_opponent;
  }
  BasicAssignment& for_player(Player s) {
    return s == Player::Proponent ? for_proponent : for_opponent;
  }

  bool operator==(const BasicAssignmentProfile&) const = default;
};

// Distinct labels owned by s, in preorder of first occurrence.
std::vector<std::string> labels(const ADTerm& t, Player s);

// Recursive success value of the whole term under a full profile. Visits
// every node, so a missing label is reported for the first uncovered leaf in
// preorder. Throws EvalError on uncovered labels and nullary gates.
bool sat(const ADTerm& t, const BasicAssignmentProfile& beta);

// Whether s is happy with the outcome under a full profile: the term's own
// player succeeded and it is s, or it failed and s is the other player.
bool successful_under_profile(const ADTerm& t,
                              const BasicAssignmentProfile& beta, Player s);

// Whether beta_s guarantees success for s against every assignment the other
// player can choose for the opposite-owned labels occurring in t.
bool successful_under_assignment(const ADTerm& t,
                                 const BasicAssignment& beta_s, Player s);

// First assignment (in enumeration order, see AssignmentEnumerator) over
// labels(t, s) that guarantees success for s; nullopt when none exists.
std::optional<BasicAssignment> satisfiable_for(const ADTerm& t, Player s);

// All assignments of `owner` over a fixed label list, ordered
// lexicographically by the list with false before true; index 0 is
// all-false. At most 63 labels.
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(std::vector<std::string> labels, Player owner);

  std::uint64_t size() const { return std::uint64_t{1} << labels_.size(); }
  BasicAssignment at(std::uint64_t index) const;

 private:
  std::vector<std::string> labels_;
  Player owner_;
};

}  // namespace adtgame

#endif  // ADTGAME_ADTERM_HPP_
