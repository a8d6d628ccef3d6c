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

// 2-walks. A 2-walk of length k is a walk w_0..w_{2^k} whose dyadic
// midpoint triples are pairwise distinct and whose even-index neighbours
// w_{2j}, w_{2j+2} are non-adjacent. Vertices may repeat across spans that
// are not siblings.

#ifndef METAMOUR_WALKS_HPP_
#define METAMOUR_WALKS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct TwoWalk {
  std::size_t level = 0;
  std::vector<Vertex> vertices;  // 2^level + 1 entries

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  // Sub-walk spanning positions [j * 2^l, (j+1) * 2^l].
  TwoWalk span(std::size_t l, std::size_t j) const;
};

// Checks every defining condition of a 2-walk directly.
bool satisfies_two_walk_invariants(const Graph& g, const TwoWalk& walk);

// Per-level relations R_k (some 2-walk of length k joins the pair) and F_k
// (some fully minimal one does), computed by squaring at the top split:
//   R_1 = M(G),  R_k(u,v) <=> exists w: R_{k-1}(u,w) and R_{k-1}(w,v)
//   F_1 = R_1,   F_k(u,v) <=> not R_{k-1}(u,v) and exists w: F_{k-1}(u,w), F_{k-1}(w,v)
// Relations are stored as graphs (symmetric, irreflexive).
class FmRelation {
 public:
  // Computes levels until the pair (R_k, F_k) repeats, or until max_level
  // when max_level > 0.
  static FmRelation compute(const Graph& g, std::size_t max_level = 0);

  const Graph& graph() const { return graph_; }
  std::size_t computed_levels() const { return reach_.size(); }
  bool saturated() const { return cycle_length_ != 0; }
  // Levels past the computed range fold back into the detected cycle.
  // Requires saturation for k > computed_levels().
  const Graph& reach(std::size_t k) const;
  const Graph& fully_minimal(std::size_t k) const;
  std::size_t cycle_start() const { return cycle_start_; }
  std::size_t cycle_length() const { return cycle_length_; }

  // Least k with R_k(u,v); absent when no level relates the pair.
  std::optional<std::size_t> d2(Vertex u, Vertex v) const;

 private:
  std::size_t fold(std::size_t k) const;

  Graph graph_{0};
  std::vector<Graph> reach_;          // reach_[k-1] = R_k
  std::vector<Graph> fully_minimal_;  // fully_minimal_[k-1] = F_k
  std::size_t cycle_start_ = 0;
  std::size_t cycle_length_ = 0;
};

bool two_walk_exists(const Graph& g, Vertex u, Vertex v, std::size_t k);
std::optional<std::size_t> d2_value(const Graph& g, Vertex u, Vertex v);
Graph fully_minimal_set(const Graph& g, std::size_t k);

// A walk is fully minimal when no span of 2^{i+1} edges (1 <= i < level)
// has endpoints joined by a 2-walk of length i.
bool is_fully_minimal(const FmRelation& rel, const TwoWalk& walk);

struct FmParity {
  Graph even{0};  // union of FM_k over even k <= bound
  Graph odd{0};
  std::size_t even_by = 0;  // least even N reaching it (0 if empty)
  std::size_t odd_by = 0;
  std::size_t stabilized_by = 0;  // max(even_by, odd_by)
  // True when the unions up to the bound already equal the unions over all k.
  bool confirmed = false;
};

FmParity fm_parity_sets(const Graph& g, std::size_t bound);

// Brute force over vertex sequences. visit() receives every sequence from
// the source that satisfies the 2-walk conditions at the given level;
// returning false stops the enumeration.
void enumerate_two_walks(const Graph& g, Vertex source, std::size_t level,
                         const std::function<bool(const TwoWalk&)>& visit);

// Pairs joined by a 2-walk of length k, found by enumeration.
Graph brute_force_reach(const Graph& g, std::size_t k);

inline constexpr std::size_t kOracleMaxLevel = 3;
inline constexpr std::size_t kOracleMaxOrder = 12;

// E(M^k(G)) rebuilt from walks alone: uv is included when uv is not in the
// level k-1 result and some walk of 2^k edges has every span of 2^i edges
// (0 < i < k) landing on an edge of the level-i result. Throws BudgetError
// outside k <= 3, n <= 12.
Graph mk_edge_oracle(const Graph& g, std::size_t k);

// Concrete walks showing that minimal length and full minimality are
// independent properties, each tagged with the graph it lives in.
struct WalkWitness {
  std::string graph_name;
  Graph graph{0};
  TwoWalk walk;
};

struct RemarkWitness {
  std::optional<WalkWitness> minimal_not_fully_minimal;
  std::optional<WalkWitness> fully_minimal_not_minimal;
};

struct NamedGraph {
  std::string name;
  Graph graph{0};
};

// G(m, 2) for m in [5, 12], followed by the other G(m, j) with m <= 12.
std::vector<NamedGraph> remark_candidates();

// Scans candidates in order, enumerating walks of level <= max_level.
RemarkWitness find_remark_witnesses(std::span<const NamedGraph> candidates,
                                    std::size_t max_level);

}  // namespace metamour

#endif  // METAMOUR_WALKS_HPP_
