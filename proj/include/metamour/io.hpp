// Copyright 2026 The Metamour Authors
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

// Text formats: graph6, DOT, plain edge lists, and the one-line graph spec
// language used by the command line.

#ifndef METAMOUR_IO_HPP_
#define METAMOUR_IO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxGraph6Order = 62;

// Short-form graph6 only (n <= 62).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Undirected DOT. With labels, node i carries label="labels[i]".
std::string export_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

// "n <order>" then one "x y" line per edge.
std::string export_edgelist(const Graph& g);
Graph parse_edgelist(std::string_view text);

struct ParsedGraph {
  Graph graph;
  std::string spec;                 // normalized input
  std::vector<std::string> labels;  // family labels; empty when none apply
};

// Grammar:
//   cycle:n | path:n | complete:n | edgeless:n | c5hat | paley:q
//   petersen:m,j | tree:h,m | g6:<graph6>
//   joinalong:<base>;<block>,<block>,...
// Inside a block list a comma followed by a digit continues the current
// block, so "joinalong:cycle:5;petersen:5,2,complete:1,..." keeps
// petersen:5,2 whole. Throws FormatError on any syntax or domain error.
ParsedGraph parse_graph_spec(std::string_view spec);

}  // namespace metamour

#endif  // METAMOUR_IO_HPP_
