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

#ifndef ADTGAME_PATH_HPP_
#define ADTGAME_PATH_HPP_

#include <compare>
#include <string>
#include <vector>

namespace adtgame {

// Position of a node inside a tree: the sequence of 0-based child indices
// from the root. The empty path is the root. Paths order lexicographically,
// which coincides with preorder.
struct NodePath {
  std::vector<int> steps;

  NodePath() = default;
  explicit NodePath(std::vector<int> s) : steps(std::move(s)) {}

  bool operator==(const NodePath&) const = default;
  auto operator<=>(const NodePath&) const = default;

  bool empty() const { return steps.empty(); }
  std::size_t depth() const { return steps.size(); }

  NodePath child(int index) const {
    NodePath p(*this);
    p.steps.push_back(index);
    return p;
  }

  // Renders "/" for the root and "/i/j/..." otherwise.
  std::string to_string() const;

  // Inverse of to_string. Throws ParseError on malformed input.
  static NodePath parse(const std::string& text);
};

}  // namespace adtgame

#endif  // ADTGAME_PATH_HPP_
