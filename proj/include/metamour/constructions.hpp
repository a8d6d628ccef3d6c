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

// Graph families with fixed vertex numbering. Every builder is a pure
// function of its arguments.

#ifndef METAMOUR_CONSTRUCTIONS_HPP_
#define METAMOUR_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

// A constructor was called outside its parameter domain.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but outside what this library implements
// (Paley graphs over fields that are not prime).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PrimitiveKind { kCycle, kPath, kComplete, kEdgeless, kC5Hat };

// cycle/path: 0-1-2-...; c5hat: outer cycle 0..4 in order, apex 5 adjacent
// to 0 and 1 (n is ignored).
Graph primitive(PrimitiveKind kind, std::size_t n = 0);
inline Graph cycle(std::size_t n) { return primitive(PrimitiveKind::kCycle, n); }
inline Graph path(std::size_t n) { return primitive(PrimitiveKind::kPath, n); }
inline Graph complete(std::size_t n) { return primitive(PrimitiveKind::kComplete, n); }
inline Graph edgeless(std::size_t n) { return primitive(PrimitiveKind::kEdgeless, n); }
inline Graph c5hat() { return primitive(PrimitiveKind::kC5Hat); }

bool is_prime(std::uint64_t q);

// QR(q) for prime q = 1 (mod 4): x ~ y iff x - y is a nonzero square mod q.
Graph paley(std::uint64_t q);

// Generalized Petersen graph G(m, j): exterior v_i = i, interior u_i = m + i.
struct PetersenSpec {
  std::size_t m;
  std::size_t j;

  // Throws ConstructionError unless m >= 5 and 1 <= j < m/2.
  static PetersenSpec make(std::size_t m, std::size_t j);

  Vertex exterior(std::size_t i) const { return i % m; }
  Vertex interior(std::size_t i) const { return m + i % m; }
  std::size_t order() const { return 2 * m; }
  std::size_t interior_cycles() const;
  std::vector<std::string> labels() const;  // "v0".."u{m-1}"
};

Graph generalized_petersen(const PetersenSpec& spec);
Graph generalized_petersen(std::size_t m, std::size_t j);

// Complete m-ary tree of height h. Root is 0 and children are numbered
// breadth-first: the children of x are m*x+1 .. m*x+m.
Graph mary_tree(std::size_t h, std::size_t m);
std::size_t mary_tree_order(std::size_t h, std::size_t m);

// Replacing each base vertex by a block; blocks are concatenated in base
// vertex order.
struct BlockAssignment {
  Graph base;
  std::vector<Graph> blocks;
  std::vector<std::size_t> offsets;

  static BlockAssignment make(Graph base, std::vector<Graph> blocks);
  std::size_t order() const;
  // Vertices of the joined graph that came from block b.
  std::vector<Vertex> block_vertices(std::size_t b) const;
};

Graph join_along(const BlockAssignment& assignment);
Graph join_along(const Graph& base, std::span<const Graph> blocks);

// Wd(m, m): m copies of K_m sharing vertex 0.
Graph windmill(std::size_t m);
// G joined with itself m times.
Graph join_power(const Graph& g, std::size_t m);

// Block list {G, K1, ..., K1} along C_n with n = 5 (k = 2) or 2^k - 1.
// The result has metamour period exactly k and contains G induced on
// vertices 0..|V(G)|-1.
Graph embed_with_period(const Graph& g, std::size_t k);
std::size_t embed_with_period_base(std::size_t k);

// {K1, G, co-G, co-G, G} along C_5: metamour-complementary and
// self-complementary, 4|V(G)| + 1 vertices, G induced at offset 1.
Graph embed_selfcomplementary(const Graph& g);

// {G, edgeless blocks of distinct sizes} along C_{2^k + 1}. Block sizes are
// the smallest strictly increasing values that avoid |V(G)|.
Graph embed_pseudo_period(const Graph& g, std::size_t k);
std::vector<std::size_t> pseudo_period_block_sizes(std::size_t g_order, std::size_t k);

}  // namespace metamour

#endif  // METAMOUR_CONSTRUCTIONS_HPP_
