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

#ifndef ADTGAME_CLI_HPP_
#define ADTGAME_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace adtgame {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // analysis positive / plain success
inline constexpr int kExitNegative = 1;  // unsat, losing, invalid input data,
                                         // or a check counterexample
inline constexpr int kExitUsage = 2;     // bad arguments or unreadable input

// The command-line driver, callable in-process. args excludes the program
// name; "-" as a file name reads stdin. Results go to `out`, diagnostics to
// `err` (or to `out` as an {"error": ...} object under --json).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace adtgame

#endif  // ADTGAME_CLI_HPP_
