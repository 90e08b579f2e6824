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

#ifndef ADTGAME_PLAYER_HPP_
#define ADTGAME_PLAYER_HPP_

#include <cstdint>
#include <optional>

namespace adtgame {

// The two players. Every term constructor and game node is owned by one of
// them; "the other player" is a strict involution.
enum class Player : std::uint8_t {
  Proponent = 0,
  Opponent = 1,
};

constexpr Player opposite(Player s) {
  return s == Player::Proponent ? Player::Opponent : Player::Proponent;
}

constexpr char player_char(Player s) {
  return s == Player::Proponent ? 'p' : 'o';
}

constexpr const char* player_name(Player s) {
  return s == Player::Proponent ? "proponent" : "opponent";
}

constexpr std::optional<Player> player_from_char(char c) {
  if (c == 'p') return Player::Proponent;
  if (c == 'o') return Player::Opponent;
  return std::nullopt;
}

}  // namespace adtgame

#endif  // ADTGAME_PLAYER_HPP_
