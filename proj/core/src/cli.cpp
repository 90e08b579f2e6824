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

#include "adtgame/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adtgame/dot.hpp"
#include "adtgame/dsl.hpp"
#include "adtgame/json_io.hpp"
#include "adtgame/translate.hpp"
#include "adtgame/verify.hpp"

namespace adtgame {

namespace {

// Bad arguments or unreadable files, beyond what CLI11 catches itself.
struct UsageFailure : Error {
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageFailure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageFailure("cannot write '" + path + "'");
  file << text;
}

Player parse_player_option(const std::string& text) {
  const std::optional<Player> who =
      text.size() == 1 ? player_from_char(text[0]) : std::nullopt;
  if (!who) throw UsageFailure("--player must be p or o");
  return *who;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string error_json(const std::string& message) {
  return "{\"error\":\"" + json_escape(message) + "\"}";
}

struct ValidateArgs {
  std::string term_file;
  std::string game_file;
};

struct EvalArgs {
  std::string term_file;
  std::string assignment_file;
  std::string player;
};

struct SolveArgs {
  std::string term_file;
  std::string game_file;
  std::string player;
};

struct TranslateArgs {
  std::string input_file;
  std::string map_file;
};

struct ConvStrategyArgs {
  std::string game_file;
  std::string strategy_file;
};

struct ConvAssignmentArgs {
  std::string term_file;
  std::string assignment_file;
};

struct CheckArgs {
  std::string name;
  GenConfig cfg;
};

struct ExportArgs {
  std::string term_file;
  std::string game_file;
  std::string format;
  std::string output_file;
};

void require_exactly_one(const std::string& a, const std::string& b,
                         const std::string& what) {
  if (a.empty() == b.empty()) {
    throw UsageFailure("pass exactly one of " + what);
  }
}

int do_validate(const ValidateArgs& a, bool json, std::istream& in,
                std::ostream& out) {
  require_exactly_one(a.term_file, a.game_file, "--term and --game");
  ValidationReport report;
  if (!a.term_file.empty()) {
    report = validate(parse_adterm(read_input(a.term_file, in)));
  } else {
    report = validate_game(parse_game(read_input(a.game_file, in)));
  }
  if (json) {
    std::string body = "{\"ok\":";
    body += report.ok() ? "true" : "false";
    body += ",\"violations\":[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
      if (i > 0) body += ",";
      body += "{\"path\":\"" + report.violations[i].path.to_string() +
              "\",\"message\":\"" + json_escape(report.violations[i].message) +
              "\"}";
    }
    body += "]}";
    out << body << "\n";
  } else {
    out << report.to_string() << "\n";
  }
  return report.ok() ? kExitOk : kExitNegative;
}

int do_eval(const EvalArgs& a, bool json, std::istream& in,
            std::ostream& out) {
  if (a.term_file.empty()) throw UsageFailure("eval needs --term");
  if (a.assignment_file.empty()) throw UsageFailure("eval needs --assignment");
  const ADTerm t = parse_adterm(read_input(a.term_file, in));
  const AssignmentFile file =
      parse_assignment(read_input(a.assignment_file, in));
  const BasicAssignmentProfile beta = file.to_profile();
  const bool value = sat(t, beta);
  std::vector<Player> sides;
  if (a.player.empty()) {
    sides = {Player::Proponent, Player::Opponent};
  } else {
    sides = {parse_player_option(a.player)};
  }
  if (json) {
    std::string body = "{\"sat\":";
    body += value ? "true" : "false";
    body += ",\"successful\":{";
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (i > 0) body += ",";
      body += std::string("\"") + player_char(sides[i]) + "\":";
      body += successful_under_profile(t, beta, sides[i]) ? "true" : "false";
    }
    body += "}}";
    out << body << "\n";
  } else {
    out << "sat = " << (value ? "true" : "false") << "\n";
    for (Player s : sides) {
      out << "successful(" << player_char(s) << ") = "
          << (successful_under_profile(t, beta, s) ? "true" : "false")
          << "\n";
    }
  }
  return kExitOk;
}

int do_solve(const SolveArgs& a, bool json, std::istream& in,
             std::ostream& out) {
  require_exactly_one(a.term_file, a.game_file, "--term and --game");
  const Player perspective =
      a.player.empty() ? Player::Proponent : parse_player_option(a.player);
  if (!a.term_file.empty()) {
    const ADTerm t = parse_adterm(read_input(a.term_file, in));
    const std::optional<BasicAssignment> witness =
        satisfiable_for(t, perspective);
    if (json) {
      if (witness) {
        out << "{\"satisfiable\":true,\"witness\":"
            << assignment_to_json(*witness) << "}\n";
      } else {
        out << "{\"satisfiable\":false}\n";
      }
    } else if (witness) {
      out << print_assignment(*witness);
    } else {
      out << "unsatisfiable\n";
    }
    return witness ? kExitOk : kExitNegative;
  }
  const Game g = parse_game(read_input(a.game_file, in));
  const Outcome value = adtgame::out(g);
  const Player winner = outcome_winner(value);
  const std::optional<Strategy> sigma = winning_strategy(g, winner);
  if (json) {
    out << "{\"out\":\"" << outcome_text(value) << "\",\"winner\":\""
        << player_char(winner) << "\",\"winning_strategy\":"
        << (sigma ? strategy_to_json(*sigma) : std::string("null")) << "}\n";
  } else {
    out << outcome_text(value) << "\n";
    out << "winning strategy for " << player_char(winner) << ":\n";
    if (sigma) out << print_strategy(*sigma);
  }
  return winner == perspective ? kExitOk : kExitNegative;
}

int do_to_game(const TranslateArgs& a, bool json, std::istream& in,
               std::ostream& out) {
  if (a.input_file.empty()) throw UsageFailure("to-game needs --term");
  const ADTerm t = parse_adterm(read_input(a.input_file, in));
  const GameTranslation result = adterm_to_game(t);
  if (!a.map_file.empty()) {
    write_output(a.map_file, correspondence_to_json(result.map));
  }
  if (json) {
    out << "{\"game\":" << game_to_json(result.game) << ",\"correspondence\":"
        << correspondence_to_json(result.map) << "}\n";
  } else {
    out << print_game(result.game) << "\n";
  }
  return kExitOk;
}

int do_to_adterm(const TranslateArgs& a, bool json, std::istream& in,
                 std::ostream& out) {
  if (a.input_file.empty()) throw UsageFailure("to-adterm needs --game");
  const Game g = parse_game(read_input(a.input_file, in));
  const TermTranslation result = game_to_adterm(g);
  if (!a.map_file.empty()) {
    write_output(a.map_file, correspondence_to_json(result.map));
  }
  if (json) {
    out << "{\"adterm\":" << adterm_to_json(result.term)
        << ",\"correspondence\":" << correspondence_to_json(result.map)
        << "}\n";
  } else {
    out << print_adterm(result.term) << "\n";
  }
  return kExitOk;
}

int do_conv_strategy(const ConvStrategyArgs& a, bool json, std::istream& in,
                     std::ostream& out) {
  if (a.game_file.empty()) throw UsageFailure("conv-strategy needs --game");
  if (a.strategy_file.empty()) {
    throw UsageFailure("conv-strategy needs --strategy");
  }
  const Game g = parse_game(read_input(a.game_file, in));
  const Strategy sigma = parse_strategy(read_input(a.strategy_file, in), g);
  const BasicAssignment beta = strategy_to_assignment(sigma, g);
  if (json) {
    out << assignment_to_json(beta) << "\n";
  } else {
    out << print_assignment(beta);
  }
  return kExitOk;
}

int do_conv_assignment(const ConvAssignmentArgs& a, bool json,
                       std::istream& in, std::ostream& out) {
  if (a.term_file.empty()) throw UsageFailure("conv-assignment needs --term");
  if (a.assignment_file.empty()) {
    throw UsageFailure("conv-assignment needs --assignment");
  }
  const ADTerm t = parse_adterm(read_input(a.term_file, in));
  const AssignmentFile file =
      parse_assignment(read_input(a.assignment_file, in));
  const Strategy sigma = assignment_to_strategy(file.single(), t);
  if (json) {
    out << strategy_to_json(sigma) << "\n";
  } else {
    out << print_strategy(sigma);
  }
  return kExitOk;
}

int do_check(const CheckArgs& a, bool json, std::ostream& out) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), a.name) == names.end()) {
    std::string known;
    for (const std::string& n : names) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw UsageFailure("unknown check '" + a.name + "' (known: " + known +
                       ")");
  }
  const CheckReport report = check(a.name, a.cfg);
  if (json) {
    out << report_to_json(report) << "\n";
  } else if (report.counterexample) {
    out << "check " << report.check_name << ": FAILED after "
        << report.instances_tried << " instances\n";
    out << "instance: " << report.counterexample->instance << "\n";
    out << "detail: " << report.counterexample->detail << "\n";
  } else {
    out << "check " << report.check_name << ": ok ("
        << report.instances_tried << " instances)\n";
    if (report.witness) out << "witness:\n" << *report.witness;
  }
  return report.counterexample ? kExitNegative : kExitOk;
}

int do_export(const ExportArgs& a, std::istream& in, std::ostream& out) {
  require_exactly_one(a.term_file, a.game_file, "--term and --game");
  if (a.format != "dot" && a.format != "json") {
    throw UsageFailure("--format must be dot or json");
  }
  std::string payload;
  if (!a.term_file.empty()) {
    const ADTerm t = parse_adterm(read_input(a.term_file, in));
    payload = a.format == "dot" ? adterm_to_dot(t) : adterm_to_json(t) + "\n";
  } else {
    const Game g = parse_game(read_input(a.game_file, in));
    payload = a.format == "dot" ? game_to_dot(g) : game_to_json(g) + "\n";
  }
  if (a.output_file.empty()) {
    out << payload;
  } else {
    write_output(a.output_file, payload);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"attack-defense terms and two-player game trees"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable stdout");

  const auto sub = [&app](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  ValidateArgs validate_args;
  CLI::App* validate_cmd = sub("validate", "type-check a term or a game");
  validate_cmd->add_option("-t,--term", validate_args.term_file,
                           "term file ('-' for stdin)");
  validate_cmd->add_option("-g,--game", validate_args.game_file,
                           "game file ('-' for stdin)");

  EvalArgs eval_args;
  CLI::App* eval_cmd = sub("eval", "evaluate a term under a profile");
  eval_cmd->add_option("-t,--term", eval_args.term_file, "term file");
  eval_cmd->add_option("-a,--assignment", eval_args.assignment_file,
                       "assignment file with [p] and/or [o] sections");
  eval_cmd->add_option("--player", eval_args.player,
                       "report success for one player only");

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      sub("solve", "find a satisfying assignment or solve a game");
  solve_cmd->add_option("-t,--term", solve_args.term_file, "term file");
  solve_cmd->add_option("-g,--game", solve_args.game_file, "game file");
  solve_cmd->add_option("--player", solve_args.player,
                        "perspective (default p)");

  TranslateArgs to_game_args;
  CLI::App* to_game_cmd = sub("to-game", "translate a term into a game");
  to_game_cmd->add_option("-t,--term", to_game_args.input_file, "term file");
  to_game_cmd->add_option("--map", to_game_args.map_file,
                          "write the correspondence map to this file");

  TranslateArgs to_adterm_args;
  CLI::App* to_adterm_cmd = sub("to-adterm", "translate a game into a term");
  to_adterm_cmd->add_option("-g,--game", to_adterm_args.input_file,
                            "game file");
  to_adterm_cmd->add_option("--map", to_adterm_args.map_file,
                            "write the correspondence map to this file");

  ConvStrategyArgs conv_strategy_args;
  CLI::App* conv_strategy_cmd = sub(
      "conv-strategy", "turn a strategy into a basic assignment");
  conv_strategy_cmd->add_option("-g,--game", conv_strategy_args.game_file,
                                "game file");
  conv_strategy_cmd->add_option("-s,--strategy",
                                conv_strategy_args.strategy_file,
                                "strategy file");

  ConvAssignmentArgs conv_assignment_args;
  CLI::App* conv_assignment_cmd = sub(
      "conv-assignment", "turn a basic assignment into a strategy");
  conv_assignment_cmd->add_option("-t,--term",
                                  conv_assignment_args.term_file,
                                  "term file");
  conv_assignment_cmd->add_option("-a,--assignment",
                                  conv_assignment_args.assignment_file,
                                  "assignment file with one section");

  CheckArgs check_args;
  CLI::App* check_cmd = sub("check", "run a named equivalence check");
  check_cmd->add_option("--name", check_args.name, "check name")->required();
  check_cmd->add_option("--seed", check_args.cfg.seed, "generator seed");
  check_cmd->add_option("--count", check_args.cfg.instance_count,
                        "instances to try");
  check_cmd->add_option("--depth", check_args.cfg.max_depth, "max depth");
  check_cmd->add_option("--arity", check_args.cfg.max_arity, "max arity");
  check_cmd->add_option("--labels", check_args.cfg.max_basic_actions,
                        "max labels per player");
  check_cmd->add_option("--budget", check_args.cfg.budget,
                        "max enumerations per instance");
  check_cmd->add_option("--max-internal", check_args.cfg.max_internal_nodes,
                        "max internal nodes (0 = unlimited)");

  ExportArgs export_args;
  CLI::App* export_cmd = sub("export", "render a term or game");
  export_cmd->add_option("-t,--term", export_args.term_file, "term file");
  export_cmd->add_option("-g,--game", export_args.game_file, "game file");
  export_cmd->add_option("--format", export_args.format, "dot or json")
      ->required();
  export_cmd->add_option("-o,--output", export_args.output_file,
                         "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (json) {
      out << error_json(e.what()) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  }

  const auto fail = [&](const std::string& message, int code) {
    if (json) {
      out << error_json(message) << "\n";
    } else {
      err << "error: " << message << "\n";
    }
    return code;
  };

  try {
    if (validate_cmd->parsed()) return do_validate(validate_args, json, in, out);
    if (eval_cmd->parsed()) return do_eval(eval_args, json, in, out);
    if (solve_cmd->parsed()) return do_solve(solve_args, json, in, out);
    if (to_game_cmd->parsed()) return do_to_game(to_game_args, json, in, out);
    if (to_adterm_cmd->parsed()) {
      return do_to_adterm(to_adterm_args, json, in, out);
    }
    if (conv_strategy_cmd->parsed()) {
      return do_conv_strategy(conv_strategy_args, json, in, out);
    }
    if (conv_assignment_cmd->parsed()) {
      return do_conv_assignment(conv_assignment_args, json, in, out);
    }
    if (check_cmd->parsed()) return do_check(check_args, json, out);
    if (export_cmd->parsed()) return do_export(export_args, in, out);
  } catch (const ValidationError& e) {
    return fail(e.what(), kExitNegative);
  } catch (const Error& e) {
    return fail(e.what(), kExitUsage);
  }
  return fail("no subcommand", kExitUsage);
}

}  // namespace adtgame
