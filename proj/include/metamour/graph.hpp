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

#ifndef METAMOUR_GRAPH_HPP_
#define METAMOUR_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metamour {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

// Thrown for malformed graph input: self-loops, out-of-range vertices,
// size mismatches.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-width set of vertices 0..n-1 backed by 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  std::size_t universe() const { return n_; }
  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  std::size_t count() const;
  bool empty() const;
  std::vector<Vertex> members() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

// Immutable labeled simple graph on vertices 0..n-1. Adjacency is one bitset
// row per vertex; equality is labeled (bitwise) equality.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  // Throws GraphError on a self-loop or an out-of-range endpoint. Duplicate
  // and reversed pairs collapse to one edge.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const;  // edge count
  std::size_t words_per_row() const { return stride_; }

  bool adjacent(Vertex x, Vertex y) const {
    return (bits_[x * stride_ + y / kWordBits] >> (y % kWordBits)) & 1U;
  }
  std::span<const Word> row(Vertex x) const {
    return {bits_.data() + x * stride_, stride_};
  }
  std::size_t degree(Vertex x) const;
  std::size_t max_degree() const;
  std::vector<Vertex> neighbors(Vertex x) const;
  std::vector<Edge> edges() const;  // (x,y) with x < y, lexicographic
  bool is_edgeless() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  // Hash of the labeled adjacency relation.
  std::size_t hash() const;

 private:
  friend class GraphBuilder;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

// Mutable staging area for constructing a Graph. All operations keep the
// relation symmetric and irreflexive.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return g_.n_; }
  void add_edge(Vertex x, Vertex y);
  void remove_edge(Vertex x, Vertex y);
  bool adjacent(Vertex x, Vertex y) const { return g_.adjacent(x, y); }
  std::span<Word> row(Vertex x) {
    return {g_.bits_.data() + x * g_.stride_, g_.stride_};
  }
  Graph build() &&;

 private:
  void check(Vertex x, Vertex y) const;
  Graph g_;
};

// Shortest-path length, or the distinguished unreachable value.
class Distance {
 public:
  static constexpr Distance finite(std::uint32_t v) { return Distance(v, false); }
  static constexpr Distance infinite() { return Distance(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  std::uint32_t value() const {
    if (infinite_) throw std::logic_error("Distance::value on INFINITE");
    return value_;
  }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  // INFINITE compares greater than every finite distance.
  friend constexpr auto operator<=>(const Distance& a, const Distance& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

 private:
  constexpr Distance(std::uint32_t v, bool inf) : value_(v), infinite_(inf) {}
  std::uint32_t value_;
  bool infinite_;
};

// Row-major n x n distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const { return n_; }
  Distance at(Vertex x, Vertex y) const;
  void set(Vertex x, Vertex y, Distance d);

 private:
  static constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

enum class CombineMode { kUnion, kJoin };

Graph complement(const Graph& g);
Graph combine(const Graph& g1, const Graph& g2, CombineMode mode);
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  return combine(a, b, CombineMode::kUnion);
}
inline Graph join(const Graph& a, const Graph& b) {
  return combine(a, b, CombineMode::kJoin);
}
// Vertices of `subset` are relabeled 0..|S|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<Distance> distances_from(const Graph& g, Vertex source);
DistanceMatrix distance_matrix(const Graph& g);
Distance diameter(const Graph& g);
bool is_connected(const Graph& g);
// Components in order of their smallest vertex; each component ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// The 2-distance graph: xy is an edge iff d_G(x,y) = 2.
Graph metamour(const Graph& g);

// Graph whose edges are the pairs with at least one common neighbor in g.
Graph common_neighbor_graph(const Graph& g);

bool is_subgraph_of(const Graph& small, const Graph& big);  // edge inclusion
Graph edge_intersection(const Graph& a, const Graph& b);
Graph edge_union(const Graph& a, const Graph& b);
Graph edge_difference(const Graph& a, const Graph& b);

}  // namespace metamour

template <>
struct std::hash<metamour::Graph> {
  std::size_t operator()(const metamour::Graph& g) const { return g.hash(); }
};

#endif  // METAMOUR_GRAPH_HPP_
