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

#include "adtgame/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace adtgame {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '.';
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  // Peeks past whitespace without consuming; '\0' at end of input.
  char lookahead() {
    std::size_t i = pos_;
    while (i < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i])))
      ++i;
    return i < text_.size() ? text_[i] : '\0';
  }

  char take() {
    const char c = peek();
    ++pos_;
    return c;
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      throw ParseError("expected an identifier", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Player player() {
    const std::size_t at = pos_;
    const char c = take();
    auto s = player_from_char(c);
    if (!s) throw ParseError("expected player 'p' or 'o'", at);
    return *s;
  }

  std::size_t pos() const { return pos_; }

  void done() {
    if (!at_end()) throw ParseError("trailing input", pos_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

std::optional<std::pair<TermKind, Player>> gate_head(const std::string& word) {
  auto make = [](TermKind k, Player s) {
    return std::make_optional(std::make_pair(k, s));
  };
  if (word == "or_p") return make(TermKind::Or, Player::Proponent);
  if (word == "or_o") return make(TermKind::Or, Player::Opponent);
  if (word == "and_p") return make(TermKind::And, Player::Proponent);
  if (word == "and_o") return make(TermKind::And, Player::Opponent);
  if (word == "c_p") return make(TermKind::Counter, Player::Proponent);
  if (word == "c_o") return make(TermKind::Counter, Player::Opponent);
  return std::nullopt;
}

ADTerm parse_term(Cursor& cur, std::optional<Player> inferred) {
  const std::size_t at = cur.pos();
  const std::string word = cur.ident();
  const auto head = gate_head(word);

  if (head && cur.lookahead() == '(') {
    const auto [kind, owner] = *head;
    cur.expect('(');
    std::vector<ADTerm> children;
    // Children of a gate are typed by the gate; a counter flips the type of
    // its second child.
    children.push_back(parse_term(cur, owner));
    while (cur.peek() == ',') {
      cur.expect(',');
      const bool countermeasure =
          kind == TermKind::Counter && children.size() == 1;
      children.push_back(
          parse_term(cur, countermeasure ? opposite(owner) : owner));
    }
    cur.expect(')');
    switch (kind) {
      case TermKind::Or:
        return ADTerm::disjunction(owner, std::move(children));
      case TermKind::And:
        return ADTerm::conjunction(owner, std::move(children));
      case TermKind::Counter: {
        if (children.size() != 2) {
          throw ParseError("a counter takes exactly two children", cur.pos());
        }
        ADTerm countermeasure = std::move(children.back());
        children.pop_back();
        return ADTerm::counter(owner, std::move(children.front()),
                               std::move(countermeasure));
      }
      default:
        break;
    }
  }

  // A leaf. Optional ":p"/":o" annotation wins over the context.
  std::optional<Player> owner = inferred;
  if (cur.lookahead() == ':') {
    cur.expect(':');
    owner = cur.player();
  }
  if (!owner) {
    throw ParseError("leaf '" + word + "' needs an owner annotation here", at);
  }
  return ADTerm::basic(word, *owner);
}

Game parse_game_node(Cursor& cur) {
  const std::size_t at = cur.pos();
  const char tag = cur.take();
  if (tag == 'L') {
    const Player mover = cur.player();
    cur.expect('(');
    const char first = cur.take();
    cur.expect(',');
    const char second = cur.take();
    cur.expect(')');
    if (first == '1' && second == '0')
      return Game::leaf(mover, Outcome::ProponentWins);
    if (first == '0' && second == '1')
      return Game::leaf(mover, Outcome::OpponentWins);
    throw ParseError("outcome must be (1,0) or (0,1)", at);
  }
  if (tag == 'N') {
    const Player mover = cur.player();
    cur.expect('(');
    std::vector<Game> children;
    children.push_back(parse_game_node(cur));
    while (cur.peek() == ',') {
      cur.expect(',');
      children.push_back(parse_game_node(cur));
    }
    cur.expect(')');
    return Game::nonleaf(mover, std::move(children));
  }
  throw ParseError("expected a game node ('L' or 'N')", at);
}

// Owner a leaf would get from its context when printing.
std::optional<Player> inferred_child_owner(const ADTerm& parent,
                                           std::size_t index) {
  if (parent.kind() == TermKind::Counter) {
    return index == 0 ? parent.owner() : opposite(parent.owner());
  }
  return parent.owner();
}

void print_term_rec(const ADTerm& t, std::optional<Player> inferred,
                    std::string& out) {
  if (t.kind() == TermKind::Basic) {
    out += t.label();
    if (!inferred || *inferred != t.owner()) {
      out += ':';
      out += player_char(t.owner());
    }
    return;
  }
  switch (t.kind()) {
    case TermKind::Or:
      out += "or_";
      break;
    case TermKind::And:
      out += "and_";
      break;
    case TermKind::Counter:
      out += "c_";
      break;
    default:
      break;
  }
  out += player_char(t.owner());
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i > 0) out += ", ";
    print_term_rec(t.children()[i], inferred_child_owner(t, i), out);
  }
  out += ')';
}

void print_game_rec(const Game& g, std::string& out) {
  if (g.kind() == GameKind::Leaf) {
    out += 'L';
    out += player_char(g.mover());
    out += outcome_text(g.outcome());
    return;
  }
  out += 'N';
  out += player_char(g.mover());
  out += '(';
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    if (i > 0) out += ", ";
    print_game_rec(g.children()[i], out);
  }
  out += ')';
}

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ADTerm parse_adterm(const std::string& text) {
  Cursor cur(text);
  ADTerm t = parse_term(cur, std::nullopt);
  cur.done();
  return t;
}

std::string print_adterm(const ADTerm& t) {
  std::string out;
  print_term_rec(t, std::nullopt, out);
  return out;
}

Game parse_game(const std::string& text) {
  Cursor cur(text);
  Game g = parse_game_node(cur);
  cur.done();
  return g;
}

std::string print_game(const Game& g) {
  std::string out;
  print_game_rec(g, out);
  return out;
}

Outcome parse_outcome(const std::string& text) {
  const std::string s = strip(text);
  if (s == "(1,0)") return Outcome::ProponentWins;
  if (s == "(0,1)") return Outcome::OpponentWins;
  throw ParseError("outcome must be (1,0) or (0,1)", 0);
}

BasicAssignmentProfile AssignmentFile::to_profile() const {
  BasicAssignmentProfile beta;
  if (proponent) beta.for_proponent = *proponent;
  if (opponent) beta.for_opponent = *opponent;
  return beta;
}

const BasicAssignment& AssignmentFile::only(Player s) const {
  const auto& side = s == Player::Proponent ? proponent : opponent;
  if (!side) {
    throw EvalError(std::string("assignment has no [") + player_char(s) +
                    "] section");
  }
  return *side;
}

const BasicAssignment& AssignmentFile::single() const {
  if (proponent.has_value() == opponent.has_value()) {
    throw EvalError("expected an assignment for exactly one player");
  }
  return proponent ? *proponent : *opponent;
}

AssignmentFile parse_assignment(const std::string& text) {
  AssignmentFile file;
  std::optional<Player> section;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string where = " on line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.size() != 3 || line.back() != ']') {
        throw ParseError("malformed section header" + where, 0);
      }
      auto s = player_from_char(line[1]);
      if (!s) throw ParseError("section must be [p] or [o]" + where, 0);
      auto& side = *s == Player::Proponent ? file.proponent : file.opponent;
      if (side) throw ParseError("duplicate section" + where, 0);
      side.emplace();
      side->owner = *s;
      section = *s;
      continue;
    }
    if (!section) {
      throw ParseError("value before any [p]/[o] section" + where, 0);
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'label = true|false'" + where, 0);
    }
    const std::string label = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (label.empty() || !ident_start(label[0])) {
      throw ParseError("malformed label" + where, 0);
    }
    for (char c : label) {
      if (!ident_char(c)) throw ParseError("malformed label" + where, 0);
    }
    bool b;
    if (value == "true") {
      b = true;
    } else if (value == "false") {
      b = false;
    } else {
      throw ParseError("value must be true or false" + where, 0);
    }
    auto& side =
        *section == Player::Proponent ? file.proponent : file.opponent;
    if (!side->values.emplace(label, b).second) {
      throw ParseError("duplicate label '" + label + "'" + where, 0);
    }
  }
  return file;
}

std::string print_assignment(const BasicAssignment& beta) {
  std::string out = std::string("[") + player_char(beta.owner) + "]\n";
  for (const auto& [label, value] : beta.values) {
    out += label + " = " + (value ? "true" : "false") + "\n";
  }
  return out;
}

std::string print_assignment_profile(const BasicAssignmentProfile& beta) {
  return print_assignment(beta.for_proponent) +
         print_assignment(beta.for_opponent);
}

Strategy parse_strategy(const std::string& text, const Game& g,
                        Player owner) {
  Strategy sigma;
  sigma.owner = owner;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string where = " on line " + std::to_string(line_no);
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("expected '<path> -> <index>'" + where, 0);
    }
    NodePath path;
    try {
      path = NodePath::parse(strip(line.substr(0, arrow)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + where, 0);
    }
    const std::string index_text = strip(line.substr(arrow + 2));
    if (index_text.empty() ||
        index_text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected a child index" + where, 0);
    }
    const int index = std::stoi(index_text);
    if (!sigma.choices.emplace(path, index).second) {
      throw ParseError("duplicate path " + path.to_string() + where, 0);
    }
  }
  const ValidationReport report = validate_strategy(g, sigma);
  if (!report.ok()) {
    throw StrategyError("strategy does not bind to the game:\n" +
                        report.to_string());
  }
  return sigma;
}

Strategy parse_strategy(const std::string& text, const Game& g) {
  // Infer the owner: try the proponent, fall back to the opponent. A game
  // where both fail cannot be bound at all.
  try {
    return parse_strategy(text, g, Player::Proponent);
  } catch (const StrategyError&) {
    return parse_strategy(text, g, Player::Opponent);
  }
}

std::string print_strategy(const Strategy& sigma) {
  std::string out;
  for (const auto& [path, index] : sigma.choices) {
    out += path.to_string() + " -> " + std::to_string(index) + "\n";
  }
  return out;
}

}  // namespace adtgame
