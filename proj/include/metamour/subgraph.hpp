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

#ifndef METAMOUR_SUBGRAPH_HPP_
#define METAMOUR_SUBGRAPH_HPP_

#include <optional>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

// Backtracking search for an injective map from V(pattern) into V(host) that
// sends edges to edges (and, when `induced`, non-edges to non-edges).
// Pattern vertices are placed in ascending id order and host candidates are
// tried in ascending id order, so the first map found is reproducible.
// Returns map[p] = host vertex for every pattern vertex p.
std::optional<std::vector<Vertex>> subgraph_search(const Graph& host,
                                                   const Graph& pattern,
                                                   bool induced);

}  // namespace metamour

#endif  // METAMOUR_SUBGRAPH_HPP_
