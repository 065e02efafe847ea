// Copyright 2026 The wlamr Authors
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

#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wlamr/penman.hpp"

namespace wlamr {

// Which edges a node reads from during one WL iteration.
//   kUndirected: every incident edge, with its role.
//   kTopDown:    outgoing edges only (a node hears its children).
//   kBottomUp:   incoming edges only (a node hears its parents).
//   kTwoWays:    outgoing edges with their role plus incoming edges with the
//                inverse role "<role>-of".
enum class Direction { kUndirected, kTopDown, kBottomUp, kTwoWays };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kUndirected, Direction::kTopDown, Direction::kBottomUp,
    Direction::kTwoWays};

inline std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kUndirected: return "undirected";
    case Direction::kTopDown: return "top-down";
    case Direction::kBottomUp: return "bottom-up";
    case Direction::kTwoWays: return "2ways";
  }
  return "undirected";
}

inline Direction parse_direction(std::string_view name) {
  for (Direction d : kAllDirections) {
    if (direction_name(d) == name) return d;
  }
  throw ConfigError("unknown direction '" + std::string(name) +
                    "' (expected undirected, top-down, bottom-up or 2ways)");
}

struct Neighbor {
  std::size_t node;
  std::string role;
};

// Per-node neighbor lists under a direction mode, in edge order.
inline std::vector<std::vector<Neighbor>> neighborhoods(const AmrGraph& g,
                                                        Direction dir) {
  std::vector<std::vector<Neighbor>> out(g.size());
  for (const Edge& e : g.edges()) {
    switch (dir) {
      case Direction::kUndirected:
        out[e.source].push_back({e.target, e.role});
        out[e.target].push_back({e.source, e.role});
        break;
      case Direction::kTopDown:
        out[e.source].push_back({e.target, e.role});
        break;
      case Direction::kBottomUp:
        out[e.target].push_back({e.source, e.role});
        break;
      case Direction::kTwoWays:
        out[e.source].push_back({e.target, e.role});
        out[e.target].push_back({e.source, e.role + "-of"});
        break;
    }
  }
  return out;
}

// Role labels a direction mode can present to a node, e.g. for sizing edge
// parameters. 2ways adds the "-of" variants.
inline std::set<std::string> role_labels(const AmrGraph& g, Direction dir) {
  std::set<std::string> out;
  for (const Edge& e : g.edges()) {
    out.insert(e.role);
    if (dir == Direction::kTwoWays) out.insert(e.role + "-of");
  }
  return out;
}

}  // namespace wlamr
