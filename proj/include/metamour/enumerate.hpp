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

// Isomorph-free generation of all graphs on n <= 10 vertices.
//
// Graphs grow one vertex at a time. A child G = P + v is accepted only when v
// lies in the automorphism orbit of G's canonical deletion vertex, so every
// class is produced from exactly one parent class. Children of one parent that
// are isomorphic to each other are collapsed by canonical form.

#ifndef METAMOUR_ENUMERATE_HPP_
#define METAMOUR_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

inline constexpr std::size_t kMaxEnumerationOrder = 10;

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Return false to stop the stream early.
using GraphVisitor = std::function<bool(const Graph&)>;

// One representative per isomorphism class on exactly n vertices, in a fixed
// order. Throws EnumerationError for n > 10. Returns the number of graphs
// visited.
std::size_t enumerate_graphs(std::size_t n, bool connected_only, const GraphVisitor& visit);

// Every n in [1, n_max], smallest first.
std::size_t enumerate_graphs_upto(std::size_t n_max, bool connected_only,
                                  const GraphVisitor& visit);

std::vector<Graph> all_graphs(std::size_t n, bool connected_only);

struct ScanResult {
  std::vector<Graph> matches;  // enumeration order
  std::size_t scanned = 0;
};

// Runs `pred` over all graphs on 1..n_max vertices using `jobs` worker
// threads (0 = hardware concurrency). Matches come back in enumeration order
// whatever the job count. `pred` must be safe to call concurrently.
ScanResult parallel_scan(std::size_t n_max, bool connected_only, std::size_t jobs,
                         const std::function<bool(const Graph&)>& pred);

}  // namespace metamour

#endif  // METAMOUR_ENUMERATE_HPP_
