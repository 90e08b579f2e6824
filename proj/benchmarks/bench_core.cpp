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

#include <benchmark/benchmark.h>

#include "adtgame/adterm.hpp"
#include "adtgame/dsl.hpp"
#include "adtgame/game.hpp"
#include "adtgame/translate.hpp"
#include "adtgame/verify.hpp"

namespace {

using adtgame::ADTerm;
using adtgame::Game;
using adtgame::GenConfig;
using adtgame::Player;

GenConfig bench_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = 5;
  cfg.max_arity = 3;
  cfg.max_basic_actions = 10;
  return cfg;
}

void BM_sat(benchmark::State& state) {
  const ADTerm t = adtgame::gen_adterm(bench_config(7));
  adtgame::BasicAssignmentProfile beta{
      adtgame::AssignmentEnumerator(labels(t, Player::Proponent),
                                    Player::Proponent)
          .at(0),
      adtgame::AssignmentEnumerator(labels(t, Player::Opponent),
                                    Player::Opponent)
          .at(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::sat(t, beta));
  }
}
BENCHMARK(BM_sat);

void BM_satisfiable_for(benchmark::State& state) {
  const ADTerm t = adtgame::gen_adterm(bench_config(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::satisfiable_for(t, Player::Proponent));
  }
}
BENCHMARK(BM_satisfiable_for);

void BM_out(benchmark::State& state) {
  const Game g = adtgame::gen_game(bench_config(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::out(g));
  }
}
BENCHMARK(BM_out);

void BM_game_to_adterm(benchmark::State& state) {
  const Game g = adtgame::gen_game(bench_config(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::game_to_adterm(g));
  }
}
BENCHMARK(BM_game_to_adterm);

void BM_adterm_to_game(benchmark::State& state) {
  const ADTerm t = adtgame::gen_adterm(bench_config(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::adterm_to_game(t));
  }
}
BENCHMARK(BM_adterm_to_game);

void BM_parse_print_roundtrip(benchmark::State& state) {
  const std::string text =
      adtgame::print_adterm(adtgame::gen_adterm(bench_config(7)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adtgame::parse_adterm(text));
  }
}
BENCHMARK(BM_parse_print_roundtrip);

}  // namespace

BENCHMARK_MAIN();
