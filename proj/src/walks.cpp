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

#include "metamour/walks.hpp"

#include <string>
#include <unordered_map>
#include <utility>

#include "metamour/constructions.hpp"

namespace metamour {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Graph, Graph>& p) const {
    return p.first.hash() * 0x9E3779B97F4A7C15ull ^ p.second.hash();
  }
};

void require_distinct(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("2-walk endpoints must be distinct");
}

}  // namespace

TwoWalk TwoWalk::span(std::size_t l, std::size_t j) const {
  const std::size_t width = std::size_t{1} << l;
  TwoWalk out;
  out.level = l;
  out.vertices.assign(vertices.begin() + static_cast<std::ptrdiff_t>(j * width),
                      vertices.begin() + static_cast<std::ptrdiff_t>((j + 1) * width + 1));
  return out;
}

bool satisfies_two_walk_invariants(const Graph& g, const TwoWalk& walk) {
  const std::size_t k = walk.level;
  const auto& w = walk.vertices;
  if (k == 0 || w.size() != (std::size_t{1} << k) + 1) return false;
  for (Vertex x : w) {
    if (x >= g.order()) return false;
  }
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (!g.adjacent(w[p], w[p + 1])) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t s = std::size_t{1} << i;
    for (std::size_t j = 0; j < (std::size_t{1} << (k - i - 1)); ++j) {
      const Vertex a = w[2 * j * s], b = w[(2 * j + 1) * s], c = w[2 * (j + 1) * s];
      if (a == b || b == c || a == c) return false;
    }
  }
  for (std::size_t j = 0; j < (std::size_t{1} << (k - 1)); ++j) {
    if (g.adjacent(w[2 * j], w[2 * (j + 1)])) return false;
  }
  return true;
}

FmRelation FmRelation::compute(const Graph& g, std::size_t max_level) {
  FmRelation rel;
  rel.graph_ = g;
  std::unordered_map<std::pair<Graph, Graph>, std::size_t, PairHash> seen;
  Graph r = metamour(g);
  Graph f = r;
  for (std::size_t k = 1;; ++k) {
    auto [it, fresh] = seen.emplace(std::make_pair(r, f), k);
    if (!fresh) {
      rel.cycle_start_ = it->second;
      rel.cycle_length_ = k - it->second;
      return rel;
    }
    rel.reach_.push_back(r);
    rel.fully_minimal_.push_back(f);
    if (max_level != 0 && k >= max_level) return rel;
    Graph next_f = edge_difference(common_neighbor_graph(f), r);
    r = common_neighbor_graph(r);
    f = std::move(next_f);
  }
}

std::size_t FmRelation::fold(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("relation levels start at 1");
  if (k <= reach_.size()) return k - 1;
  if (!saturated()) {
    throw std::out_of_range("level " + std::to_string(k) + " beyond computed range");
  }
  return cycle_start_ - 1 + (k - cycle_start_) % cycle_length_;
}

const Graph& FmRelation::reach(std::size_t k) const { return reach_[fold(k)]; }
const Graph& FmRelation::fully_minimal(std::size_t k) const { return fully_minimal_[fold(k)]; }

std::optional<std::size_t> FmRelation::d2(Vertex u, Vertex v) const {
  require_distinct(u, v);
  for (std::size_t k = 0; k < reach_.size(); ++k) {
    if (reach_[k].adjacent(u, v)) return k + 1;
  }
  return std::nullopt;
}

bool two_walk_exists(const Graph& g, Vertex u, Vertex v, std::size_t k) {
  require_distinct(u, v);
  if (k == 0) throw std::invalid_argument("2-walk length must be >= 1");
  FmRelation rel = FmRelation::compute(g, k);
  if (k > rel.computed_levels() && !rel.saturated()) return false;
  return rel.reach(k).adjacent(u, v);
}

std::optional<std::size_t> d2_value(const Graph& g, Vertex u, Vertex v) {
  return FmRelation::compute(g).d2(u, v);
}

Graph fully_minimal_set(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("fully minimal set needs k >= 1");
  return FmRelation::compute(g, k).fully_minimal(k);
}

bool is_fully_minimal(const FmRelation& rel, const TwoWalk& walk) {
  for (std::size_t i = 1; i < walk.level; ++i) {
    const std::size_t width = std::size_t{1} << (i + 1);
    for (std::size_t j = 0; j < (std::size_t{1} << (walk.level - i - 1)); ++j) {
      if (rel.reach(i).adjacent(walk.vertices[j * width], walk.vertices[(j + 1) * width])) {
        return false;
      }
    }
  }
  return true;
}

FmParity fm_parity_sets(const Graph& g, std::size_t bound) {
  if (bound < 2) throw std::invalid_argument("fm_parity_sets: bound must be >= 2");
  const FmRelation rel = FmRelation::compute(g);
  const std::size_t n = g.order();
  // Every level past the cycle start repeats one in [start, start + 2c), with
  // both parities represented, so this horizon sees every (level, parity).
  const std::size_t horizon = rel.cycle_start() + 2 * rel.cycle_length() - 1;
  Graph all_even(n), all_odd(n);
  for (std::size_t k = 1; k <= horizon; ++k) {
    Graph& target = (k % 2 == 0) ? all_even : all_odd;
    target = edge_union(target, rel.fully_minimal(k));
  }

  FmParity out;
  out.even = Graph(n);
  out.odd = Graph(n);
  for (std::size_t k = 1; k <= bound; ++k) {
    const bool even = k % 2 == 0;
    Graph& target = even ? out.even : out.odd;
    const Graph& full = even ? all_even : all_odd;
    std::size_t& by = even ? out.even_by : out.odd_by;
    target = edge_union(target, rel.fully_minimal(k));
    if (by == 0 && target == full && !full.is_edgeless()) by = k;
  }
  out.confirmed = out.even == all_even && out.odd == all_odd;
  out.stabilized_by = std::max(out.even_by, out.odd_by);
  return out;
}

namespace {

class WalkEnumerator {
 public:
  WalkEnumerator(const Graph& g, std::size_t level,
                 const std::function<bool(const TwoWalk&)>& visit)
      : g_(g), visit_(visit) {
    walk_.level = level;
    walk_.vertices.assign((std::size_t{1} << level) + 1, 0);
  }

  bool run(Vertex source) {
    walk_.vertices[0] = source;
    return extend(1);
  }

 private:
  // Checks every condition whose last position is p.
  bool admissible(std::size_t p) const {
    const auto& w = walk_.vertices;
    for (std::size_t i = 0; i < walk_.level; ++i) {
      const std::size_t s = std::size_t{1} << i;
      if (p % (2 * s) != 0) break;
      const Vertex a = w[p - 2 * s], b = w[p - s], c = w[p];
      if (a == b || b == c || a == c) return false;
      if (i == 0 && g_.adjacent(a, c)) return false;
    }
    return true;
  }

  bool extend(std::size_t p) {
    if (p == walk_.vertices.size()) return visit_(walk_);
    for (Vertex x : g_.neighbors(walk_.vertices[p - 1])) {
      walk_.vertices[p] = x;
      if (!admissible(p)) continue;
      if (!extend(p + 1)) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(const TwoWalk&)>& visit_;
  TwoWalk walk_;
};

}  // namespace

void enumerate_two_walks(const Graph& g, Vertex source, std::size_t level,
                         const std::function<bool(const TwoWalk&)>& visit) {
  if (level == 0) throw std::invalid_argument("2-walk length must be >= 1");
  WalkEnumerator(g, level, visit).run(source);
}

Graph brute_force_reach(const Graph& g, std::size_t k) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    enumerate_two_walks(g, u, k, [&](const TwoWalk& w) {
      b.add_edge(w.source(), w.target());
      return true;
    });
  }
  return std::move(b).build();
}

namespace {

class OracleSearch {
 public:
  OracleSearch(const std::vector<Graph>& levels, std::size_t k)
      : levels_(levels), k_(k), walk_((std::size_t{1} << k) + 1) {}

  // Marks every endpoint reachable from u.
  void run(Vertex u, std::vector<bool>& hit) {
    walk_[0] = u;
    hit_ = &hit;
    extend(1);
  }

 private:
  bool spans_ok(std::size_t p) const {
    for (std::size_t i = 1; i < k_; ++i) {
      const std::size_t s = std::size_t{1} << i;
      if (p % s != 0) break;
      if (!levels_[i].adjacent(walk_[p - s], walk_[p])) return false;
    }
    return true;
  }

  void extend(std::size_t p) {
    if (p == walk_.size()) {
      (*hit_)[walk_.back()] = true;
      return;
    }
    for (Vertex x : levels_[0].neighbors(walk_[p - 1])) {
      walk_[p] = x;
      if (spans_ok(p)) extend(p + 1);
    }
  }

  const std::vector<Graph>& levels_;
  std::size_t k_;
  std::vector<Vertex> walk_;
  std::vector<bool>* hit_ = nullptr;
};

}  // namespace

Graph mk_edge_oracle(const Graph& g, std::size_t k) {
  if (k > kOracleMaxLevel || g.order() > kOracleMaxOrder) {
    throw BudgetError("mk_edge_oracle: budget is k <= " + std::to_string(kOracleMaxLevel) +
                      " and n <= " + std::to_string(kOracleMaxOrder));
  }
  std::vector<Graph> levels{g};
  for (std::size_t level = 1; level <= k; ++level) {
    OracleSearch search(levels, level);
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
      std::vector<bool> hit(g.order(), false);
      search.run(u, hit);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (hit[v] && v != u && !levels.back().adjacent(u, v)) b.add_edge(u, v);
      }
    }
    levels.push_back(std::move(b).build());
  }
  return levels[k];
}

std::vector<NamedGraph> remark_candidates() {
  std::vector<NamedGraph> out;
  for (std::size_t m = 5; m <= 12; ++m) {
    out.push_back({"G(" + std::to_string(m) + ",2)", generalized_petersen(m, 2)});
  }
  for (std::size_t m = 5; m <= 12; ++m) {
    for (std::size_t j = 1; 2 * j < m; ++j) {
      if (j == 2) continue;
      out.push_back({"G(" + std::to_string(m) + "," + std::to_string(j) + ")",
                     generalized_petersen(m, j)});
    }
  }
  return out;
}

RemarkWitness find_remark_witnesses(std::span<const NamedGraph> candidates,
                                    std::size_t max_level) {
  RemarkWitness w;
  auto done = [&] { return w.minimal_not_fully_minimal && w.fully_minimal_not_minimal; };
  for (const NamedGraph& c : candidates) {
    const FmRelation rel = FmRelation::compute(c.graph);
    for (std::size_t k = 2; k <= max_level && !done(); ++k) {
      for (Vertex u = 0; u < c.graph.order() && !done(); ++u) {
        enumerate_two_walks(c.graph, u, k, [&](const TwoWalk& walk) {
          const std::size_t d = *rel.d2(walk.source(), walk.target());
          const bool fm = is_fully_minimal(rel, walk);
          if (!w.minimal_not_fully_minimal && d == k && !fm) {
            w.minimal_not_fully_minimal = WalkWitness{c.name, c.graph, walk};
          }
          if (!w.fully_minimal_not_minimal && fm && d < k) {
            w.fully_minimal_not_minimal = WalkWitness{c.name, c.graph, walk};
          }
          return !done();
        });
      }
    }
    if (done()) break;
  }
  return w;
}

}  // namespace metamour
