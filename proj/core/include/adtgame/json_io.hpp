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

#ifndef ADTGAME_JSON_IO_HPP_
#define ADTGAME_JSON_IO_HPP_

#include <string>

#include "adtgame/adterm.hpp"
#include "adtgame/game.hpp"
#include "adtgame/translate.hpp"
#include "adtgame/verify.hpp"

namespace adtgame {

// Compact, deterministic JSON mirroring the types field for field. The
// *_from_json functions throw ParseError on malformed or mistyped input.
//
// ADTerm:   {"kind":"basic","owner":"p","label":"E"}
//           {"kind":"or"|"and","owner":"p","children":[...]}
//           {"kind":"counter","owner":"p","claim":...,"countermeasure":...}
// Game:     {"kind":"leaf","mover":"p","outcome":"(1,0)"}
//           {"kind":"nonleaf","mover":"p","children":[...]}
// BasicAssignment:  {"owner":"p","values":{"E":true,...}}
// Profile:  {"for_proponent":...,"for_opponent":...}
// Strategy: {"owner":"p","choices":{"/":0,"/0":1,...}}
// CorrespondenceMap: {"pairs":[{"source":"/","target":"/"},...]}

std::string adterm_to_json(const ADTerm& t);
ADTerm adterm_from_json(const std::string& text);

std::string game_to_json(const Game& g);
Game game_from_json(const std::string& text);

std::string assignment_to_json(const BasicAssignment& beta);
BasicAssignment assignment_from_json(const std::string& text);

std::string assignment_profile_to_json(const BasicAssignmentProfile& beta);
BasicAssignmentProfile assignment_profile_from_json(const std::string& text);

std::string strategy_to_json(const Strategy& sigma);
Strategy strategy_from_json(const std::string& text);

std::string correspondence_to_json(const CorrespondenceMap& map);
CorrespondenceMap correspondence_from_json(const std::string& text);

// Reports are write-only: consumers replay them through check() instead of
// parsing them back.
std::string report_to_json(const CheckReport& report);

}  // namespace adtgame

#endif  // ADTGAME_JSON_IO_HPP_
