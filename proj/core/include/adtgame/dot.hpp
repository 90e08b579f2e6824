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

#ifndef ADTGAME_DOT_HPP_
#define ADTGAME_DOT_HPP_

#include <string>

#include "adtgame/adterm.hpp"
#include "adtgame/game.hpp"

namespace adtgame {

// Graphviz rendering. Node names follow preorder (n0, n1, ...).
//
// Terms: every node's label carries its player; the edge from a counter to
// its countermeasure is dashed.
std::string adterm_to_dot(const ADTerm& t);

// Games: non-leaves are labeled with their mover, leaves with their
// outcome; edges out of proponent nodes are dashed.
std::string game_to_dot(const Game& g);

}  // namespace adtgame

#endif  // ADTGAME_DOT_HPP_
