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

#include "adtgame/dot.hpp"

#include <sstream>

namespace adtgame {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string term_node_text(const ADTerm& t) {
  switch (t.kind()) {
    case TermKind::Basic:
      return escape(t.label()) + " : " + player_char(t.owner());
    case TermKind::Or:
      return std::string("or : ") + player_char(t.owner());
    case TermKind::And:
      return std::string("and : ") + player_char(t.owner());
    case TermKind::Counter:
      return std::string("counter : ") + player_char(t.owner());
  }
  return "?";
}

int emit_term(const ADTerm& t, int id, std::ostringstream& nodes,
              std::ostringstream& edges) {
  const int self = id;
  nodes << "  n" << self << " [label=\"" << term_node_text(t) << "\"];\n";
  int next = id + 1;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    const int child = next;
    next = emit_term(t.children()[i], child, nodes, edges);
    edges << "  n" << self << " -> n" << child;
    if (t.kind() == TermKind::Counter && i == 1) edges << " [style=dashed]";
    edges << ";\n";
  }
  return next;
}

int emit_game(const Game& g, int id, std::ostringstream& nodes,
              std::ostringstream& edges) {
  const int self = id;
  if (g.kind() == GameKind::Leaf) {
    nodes << "  n" << self << " [label=\"" << outcome_text(g.outcome())
          << "\"];\n";
    return id + 1;
  }
  nodes << "  n" << self << " [label=\"" << player_char(g.mover())
        << "\"];\n";
  int next = id + 1;
  for (const Game& c : g.children()) {
    const int child = next;
    next = emit_game(c, child, nodes, edges);
    edges << "  n" << self << " -> n" << child;
    if (g.mover() == Player::Proponent) edges << " [style=dashed]";
    edges << ";\n";
  }
  return next;
}

}  // namespace

std::string adterm_to_dot(const ADTerm& t) {
  std::ostringstream nodes;
  std::ostringstream edges;
  emit_term(t, 0, nodes, edges);
  return "digraph adterm {\n" + nodes.str() + edges.str() + "}\n";
}

std::string game_to_dot(const Game& g) {
  std::ostringstream nodes;
  std::ostringstream edges;
  emit_game(g, 0, nodes, edges);
  return "digraph game {\n" + nodes.str() + edges.str() + "}\n";
}

}  // namespace adtgame
