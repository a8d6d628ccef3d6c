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

#include "metamour/constructions.hpp"

#include <numeric>

namespace metamour {

namespace {

void require_even_period(std::size_t k, const char* who) {
  if (k < 2 || k % 2 != 0) {
    throw ConstructionError(std::string(who) + ": k must be even and >= 2, got " +
                            std::to_string(k));
  }
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

}  // namespace

Graph primitive(PrimitiveKind kind, std::size_t n) {
  switch (kind) {
    case PrimitiveKind::kCycle: {
      if (n < 3) {
        throw ConstructionError("cycle needs at least 3 vertices, got " + std::to_string(n));
      }
      GraphBuilder b(n);
      for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
      return std::move(b).build();
    }
    case PrimitiveKind::kPath: {
      GraphBuilder b(n);
      for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
      return std::move(b).build();
    }
    case PrimitiveKind::kComplete: {
      GraphBuilder b(n);
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
      }
      return std::move(b).build();
    }
    case PrimitiveKind::kEdgeless:
      return Graph(n);
    case PrimitiveKind::kC5Hat: {
      GraphBuilder b(6);
      for (Vertex i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
      b.add_edge(5, 0);
      b.add_edge(5, 1);
      return std::move(b).build();
    }
  }
  throw ConstructionError("unknown primitive kind");
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

Graph paley(std::uint64_t q) {
  if (!is_prime_power(q)) {
    throw ConstructionError("paley: q = " + std::to_string(q) + " is not prime");
  }
  if (q % 4 != 1) {
    throw ConstructionError("paley: q = " + std::to_string(q) + " is not 1 mod 4");
  }
  if (!is_prime(q)) {
    throw UnsupportedError("paley: unsupported field, q = " + std::to_string(q) +
                           " is a proper prime power");
  }
  std::vector<bool> square(q, false);
  for (std::uint64_t x = 1; x < q; ++x) square[(x * x) % q] = true;
  GraphBuilder b(q);
  for (Vertex x = 0; x < q; ++x) {
    for (Vertex y = x + 1; y < q; ++y) {
      if (square[(y - x) % q]) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

PetersenSpec PetersenSpec::make(std::size_t m, std::size_t j) {
  if (m < 5) {
    throw ConstructionError("generalized Petersen graph needs m >= 5, got " +
                            std::to_string(m));
  }
  if (j < 1 || 2 * j >= m) {
    throw ConstructionError("generalized Petersen graph needs 1 <= j < m/2, got j = " +
                            std::to_string(j) + ", m = " + std::to_string(m));
  }
  return PetersenSpec{m, j};
}

std::size_t PetersenSpec::interior_cycles() const { return std::gcd(m, j); }

std::vector<std::string> PetersenSpec::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

Graph generalized_petersen(const PetersenSpec& spec) {
  GraphBuilder b(spec.order());
  for (std::size_t i = 0; i < spec.m; ++i) {
    b.add_edge(spec.exterior(i), spec.exterior(i + 1));
    b.add_edge(spec.exterior(i), spec.interior(i));
    b.add_edge(spec.interior(i), spec.interior(i + spec.j));
  }
  return std::move(b).build();
}

Graph generalized_petersen(std::size_t m, std::size_t j) {
  return generalized_petersen(PetersenSpec::make(m, j));
}

std::size_t mary_tree_order(std::size_t h, std::size_t m) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t d = 0; d <= h; ++d) {
    total += level;
    level *= m;
  }
  return total;
}

Graph mary_tree(std::size_t h, std::size_t m) {
  if (m < 2) {
    throw ConstructionError("m-ary tree needs m >= 2, got " + std::to_string(m));
  }
  if (h < 1) {
    throw ConstructionError("m-ary tree needs height >= 1");
  }
  const std::size_t n = mary_tree_order(h, m);
  GraphBuilder b(n);
  for (Vertex child = 1; child < n; ++child) b.add_edge((child - 1) / m, child);
  return std::move(b).build();
}

BlockAssignment BlockAssignment::make(Graph base, std::vector<Graph> blocks) {
  if (blocks.size() != base.order()) {
    throw ConstructionError("join_along: " + std::to_string(blocks.size()) +
                            " blocks for a base graph on " +
                            std::to_string(base.order()) + " vertices");
  }
  BlockAssignment a{std::move(base), std::move(blocks), {}};
  std::size_t offset = 0;
  for (const Graph& blk : a.blocks) {
    a.offsets.push_back(offset);
    offset += blk.order();
  }
  return a;
}

std::size_t BlockAssignment::order() const {
  return blocks.empty() ? 0 : offsets.back() + blocks.back().order();
}

std::vector<Vertex> BlockAssignment::block_vertices(std::size_t b) const {
  std::vector<Vertex> out(blocks[b].order());
  std::iota(out.begin(), out.end(), offsets[b]);
  return out;
}

Graph join_along(const BlockAssignment& a) {
  GraphBuilder b(a.order());
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    for (const auto& [x, y] : a.blocks[i].edges()) {
      b.add_edge(a.offsets[i] + x, a.offsets[i] + y);
    }
  }
  for (const auto& [v, w] : a.base.edges()) {
    for (std::size_t x = 0; x < a.blocks[v].order(); ++x) {
      for (std::size_t y = 0; y < a.blocks[w].order(); ++y) {
        b.add_edge(a.offsets[v] + x, a.offsets[w] + y);
      }
    }
  }
  return std::move(b).build();
}

Graph join_along(const Graph& base, std::span<const Graph> blocks) {
  return join_along(
      BlockAssignment::make(base, std::vector<Graph>(blocks.begin(), blocks.end())));
}

Graph windmill(std::size_t m) {
  if (m < 2) throw ConstructionError("windmill needs m >= 2");
  const std::size_t n = m * (m - 1) + 1;
  GraphBuilder b(n);
  for (std::size_t blade = 0; blade < m; ++blade) {
    std::vector<Vertex> members{0};
    for (std::size_t i = 0; i + 1 < m; ++i) members.push_back(1 + blade * (m - 1) + i);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) b.add_edge(members[i], members[j]);
    }
  }
  return std::move(b).build();
}

Graph join_power(const Graph& g, std::size_t m) {
  if (m < 1) throw ConstructionError("join_power needs m >= 1");
  Graph out = g;
  for (std::size_t i = 1; i < m; ++i) out = join(out, g);
  return out;
}

std::size_t embed_with_period_base(std::size_t k) {
  require_even_period(k, "embed_with_period");
  return k == 2 ? 5 : (std::size_t{1} << k) - 1;
}

Graph embed_with_period(const Graph& g, std::size_t k) {
  const std::size_t n = embed_with_period_base(k);
  if (g.order() == 0) throw ConstructionError("embed_with_period: empty input graph");
  std::vector<Graph> blocks{g};
  for (std::size_t i = 1; i < n; ++i) blocks.push_back(complete(1));
  return join_along(cycle(n), blocks);
}

Graph embed_selfcomplementary(const Graph& g) {
  const Graph co = complement(g);
  const std::vector<Graph> blocks{complete(1), g, co, co, g};
  return join_along(cycle(5), blocks);
}

std::vector<std::size_t> pseudo_period_block_sizes(std::size_t g_order, std::size_t k) {
  require_even_period(k, "embed_pseudo_period");
  const std::size_t n = (std::size_t{1} << k) + 1;
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; sizes.size() + 1 < n; ++s) {
    if (s != g_order) sizes.push_back(s);
  }
  return sizes;
}

Graph embed_pseudo_period(const Graph& g, std::size_t k) {
  const std::vector<std::size_t> sizes = pseudo_period_block_sizes(g.order(), k);
  std::vector<Graph> blocks{g};
  for (std::size_t s : sizes) blocks.push_back(edgeless(s));
  return join_along(cycle(blocks.size()), blocks);
}

}  // namespace metamour
