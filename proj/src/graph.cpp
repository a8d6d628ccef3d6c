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

#include "metamour/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace metamour {

namespace {

// Mask of valid bits in the last word of a row of width n.
Word tail_mask(std::size_t n) {
  const std::size_t r = n % kWordBits;
  return r == 0 ? ~Word{0} : ((Word{1} << r) - 1);
}

void require_same_order(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    throw GraphError("graphs have different vertex counts (" +
                     std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
  }
}

template <typename Op>
Graph rowwise(const Graph& a, const Graph& b, Op op) {
  require_same_order(a, b);
  GraphBuilder out(a.order());
  for (Vertex x = 0; x < a.order(); ++x) {
    auto ra = a.row(x);
    auto rb = b.row(x);
    auto ro = out.row(x);
    for (std::size_t w = 0; w < ro.size(); ++w) ro[w] = op(ra[w], rb[w]);
  }
  return std::move(out).build();
}

}  // namespace

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Graph::Graph(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * stride_, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return std::move(b).build();
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (Word w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t Graph::degree(Vertex x) const {
  std::size_t d = 0;
  for (Word w : row(x)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex x = 0; x < n_; ++x) best = std::max(best, degree(x));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex x) const {
  std::vector<Vertex> out;
  auto r = row(x);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Word w = r[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y : neighbors(x)) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

bool Graph::is_edgeless() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

std::size_t Graph::hash() const {
  // FNV-1a over the words, seeded with the order.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (Word w : bits_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(Vertex x, Vertex y) const {
  if (x >= g_.n_ || y >= g_.n_) {
    throw GraphError("vertex out of range in pair (" + std::to_string(x) + "," +
                     std::to_string(y) + ") for n = " + std::to_string(g_.n_));
  }
  if (x == y) {
    throw GraphError("self-loop at vertex " + std::to_string(x));
  }
}

void GraphBuilder::add_edge(Vertex x, Vertex y) {
  check(x, y);
  g_.bits_[x * g_.stride_ + y / kWordBits] |= Word{1} << (y % kWordBits);
  g_.bits_[y * g_.stride_ + x / kWordBits] |= Word{1} << (x % kWordBits);
}

void GraphBuilder::remove_edge(Vertex x, Vertex y) {
  check(x, y);
  g_.bits_[x * g_.stride_ + y / kWordBits] &= ~(Word{1} << (y % kWordBits));
  g_.bits_[y * g_.stride_ + x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

Graph GraphBuilder::build() && {
  // Rows written through row() may have broken symmetry or touched the
  // diagonal / padding; normalize so the Graph invariants hold.
  const std::size_t n = g_.n_;
  const Word mask = tail_mask(n);
  for (Vertex x = 0; x < n; ++x) {
    g_.bits_[x * g_.stride_ + x / kWordBits] &= ~(Word{1} << (x % kWordBits));
    if (g_.stride_ > 0) g_.bits_[x * g_.stride_ + g_.stride_ - 1] &= mask;
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const bool xy = g_.adjacent(x, y);
      const bool yx = g_.adjacent(y, x);
      if (xy != yx) {
        throw GraphError("asymmetric adjacency between " + std::to_string(x) +
                         " and " + std::to_string(y));
      }
    }
  }
  return std::move(g_);
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

Distance DistanceMatrix::at(Vertex x, Vertex y) const {
  const std::uint32_t v = d_[x * n_ + y];
  return v == kUnreachable ? Distance::infinite() : Distance::finite(v);
}

void DistanceMatrix::set(Vertex x, Vertex y, Distance d) {
  d_[x * n_ + y] = d.is_infinite() ? kUnreachable : d.value();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  const Word mask = tail_mask(n);
  for (Vertex x = 0; x < n; ++x) {
    auto src = g.row(x);
    auto dst = b.row(x);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = ~src[w];
    dst[dst.size() - 1] &= mask;
    dst[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
  }
  return std::move(b).build();
}

Graph combine(const Graph& g1, const Graph& g2, CombineMode mode) {
  const std::size_t n1 = g1.order();
  const std::size_t n = n1 + g2.order();
  GraphBuilder b(n);
  for (const auto& [x, y] : g1.edges()) b.add_edge(x, y);
  for (const auto& [x, y] : g2.edges()) b.add_edge(n1 + x, n1 + y);
  if (mode == CombineMode::kJoin) {
    for (Vertex x = 0; x < n1; ++x) {
      for (Vertex y = n1; y < n; ++y) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (v >= g.order()) {
      throw GraphError("induced_subgraph: vertex " + std::to_string(v) +
                       " out of range");
    }
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw GraphError("relabel: permutation size does not match vertex count");
  }
  GraphBuilder b(g.order());
  for (const auto& [x, y] : g.edges()) b.add_edge(perm[x], perm[y]);
  return std::move(b).build();
}

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  std::vector<Distance> dist(n, Distance::infinite());
  // Word-parallel BFS: frontier and unvisited sets as bitsets.
  VertexSet unvisited(n);
  for (Vertex v = 0; v < n; ++v) unvisited.insert(v);
  std::vector<Vertex> frontier{source};
  unvisited.erase(source);
  dist[source] = Distance::finite(0);
  std::uint32_t level = 0;
  const std::size_t stride = g.words_per_row();
  std::vector<Word> next(stride);
  while (!frontier.empty()) {
    ++level;
    std::fill(next.begin(), next.end(), 0);
    for (Vertex f : frontier) {
      auto r = g.row(f);
      for (std::size_t w = 0; w < stride; ++w) next[w] |= r[w];
    }
    auto un = unvisited.words();
    frontier.clear();
    for (std::size_t w = 0; w < stride; ++w) {
      Word fresh = next[w] & un[w];
      un[w] &= ~fresh;
      while (fresh != 0) {
        const Vertex v = w * kWordBits + static_cast<std::size_t>(std::countr_zero(fresh));
        dist[v] = Distance::finite(level);
        frontier.push_back(v);
        fresh &= fresh - 1;
      }
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto row = distances_from(g, x);
    for (Vertex y = 0; y < g.order(); ++y) m.set(x, y, row[y]);
  }
  return m;
}

Distance diameter(const Graph& g) {
  Distance best = Distance::finite(0);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (const Distance& d : distances_from(g, x)) {
      if (d.is_infinite()) return d;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  for (const Distance& d : distances_from(g, 0)) {
    if (d.is_infinite()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph common_neighbor_graph(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t stride = g.words_per_row();
  GraphBuilder b(n);
  for (Vertex x = 0; x < n; ++x) {
    auto out = b.row(x);
    auto r = g.row(x);
    for (std::size_t i = 0; i < stride; ++i) {
      Word w = r[i];
      while (w != 0) {
        const Vertex y = i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        auto ry = g.row(y);
        for (std::size_t k = 0; k < stride; ++k) out[k] |= ry[k];
        w &= w - 1;
      }
    }
    out[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
  }
  return std::move(b).build();
}

Graph metamour(const Graph& g) {
  return edge_difference(common_neighbor_graph(g), g);
}

bool is_subgraph_of(const Graph& small, const Graph& big) {
  require_same_order(small, big);
  for (Vertex x = 0; x < small.order(); ++x) {
    auto a = small.row(x);
    auto b = big.row(x);
    for (std::size_t w = 0; w < a.size(); ++w) {
      if ((a[w] & ~b[w]) != 0) return false;
    }
  }
  return true;
}

Graph edge_intersection(const Graph& a, const Graph& b) {
  return rowwise(a, b, [](Word x, Word y) { return x & y; });
}

Graph edge_union(const Graph& a, const Graph& b) {
  return rowwise(a, b, [](Word x, Word y) { return x | y; });
}

Graph edge_difference(const Graph& a, const Graph& b) {
  return rowwise(a, b, [](Word x, Word y) { return x & ~y; });
}

}  // namespace metamour
