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

// Slow reference implementations shared by the tests. None of these touch
// the bitset kernels.

#ifndef METAMOUR_TESTS_ORACLES_HPP_
#define METAMOUR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "metamour/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
inline constexpr int kInf = 1 << 28;

inline Matrix adjacency(const metamour::Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (const auto& [x, y] : g.edges()) a[x][y] = a[y][x] = 1;
  return a;
}

inline Matrix floyd_warshall(const metamour::Graph& g) {
  const std::size_t n = g.order();
  Matrix d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [x, y] : g.edges()) d[x][y] = d[y][x] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline metamour::Graph metamour_fw(const metamour::Graph& g) {
  const Matrix d = floyd_warshall(g);
  std::vector<metamour::Edge> e;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (d[i][j] == 2) e.emplace_back(i, j);
  return metamour::Graph::from_edges(g.order(), e);
}

inline metamour::Graph iterate_fw(metamour::Graph g, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) g = metamour_fw(g);
  return g;
}

// Graph on n vertices from a bitmask over pairs (i<j) in lexicographic order.
inline metamour::Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<metamour::Edge> e;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) e.emplace_back(i, j);
  return metamour::Graph::from_edges(n, e);
}

// Minimal pair-mask over all n! relabelings.
inline std::uint64_t min_relabel_mask(std::size_t n, std::uint64_t mask) {
  const Matrix a = adjacency(from_mask(n, mask));
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (a[p[i]][p[j]]) m |= std::uint64_t{1} << bit;
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Isomorphism class representatives (as masks) of all graphs on n vertices.
inline std::set<std::uint64_t> naive_classes(std::size_t n) {
  std::set<std::uint64_t> out;
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
    out.insert(min_relabel_mask(n, m));
  }
  return out;
}

inline bool connected_naive(const metamour::Graph& g) {
  const Matrix d = floyd_warshall(g);
  for (std::size_t j = 0; j < g.order(); ++j)
    if (d[0][j] >= kInf) return false;
  return true;
}

inline metamour::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<metamour::Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return metamour::Graph::from_edges(n, e);
}

inline std::vector<metamour::Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<metamour::Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle

#endif  // METAMOUR_TESTS_ORACLES_HPP_
