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

#include "adtgame/path.hpp"

#include <cctype>

#include "adtgame/errors.hpp"

namespace adtgame {

std::string NodePath::to_string() const {
  if (steps.empty()) return "/";
  std::string s;
  for (int i : steps) {
    s += '/';
    s += std::to_string(i);
  }
  return s;
}

NodePath NodePath::parse(const std::string& text) {
  if (text.empty() || text[0] != '/') {
    throw ParseError("path must start with '/'", 0);
  }
  NodePath p;
  if (text == "/") return p;
  std::size_t i = 1;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected child index in path", i);
    }
    int value = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    p.steps.push_back(value);
    if (i < text.size()) {
      if (text[i] != '/') throw ParseError("expected '/' in path", i);
      ++i;
      if (i == text.size()) throw ParseError("trailing '/' in path", i - 1);
    }
  }
  return p;
}

}  // namespace adtgame
