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

#include "metamour/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "metamour/constructions.hpp"

namespace metamour {

namespace {

void require_tall(std::size_t h, const char* who) {
  if (h < 5) {
    throw std::invalid_argument(std::string(who) + ": needs h >= 5 (use small_tree_expected)");
  }
}

void add_clique(GraphBuilder& b, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) b.add_edge(vs[i], vs[j]);
  }
}

std::string k_name(const char* k, std::size_t n) { return std::string(k) + std::to_string(n); }

}  // namespace

std::string TreeCoord::to_string() const {
  std::string s = "r";
  for (std::size_t c : path) s += "." + std::to_string(c);
  return s;
}

TreeShape::TreeShape(std::size_t h, std::size_t m) : h_(h), m_(m), n_(mary_tree_order(h, m)) {
  if (m < 2) throw std::invalid_argument("tree arity must be >= 2");
  if (h < 1) throw std::invalid_argument("tree height must be >= 1");
}

std::size_t TreeShape::depth(Vertex x) const {
  std::size_t d = 0;
  for (; x != 0; x = (x - 1) / m_) ++d;
  return d;
}

TreeCoord TreeShape::coord(Vertex x) const {
  if (x >= n_) throw std::invalid_argument("vertex outside the tree");
  TreeCoord c;
  for (; x != 0; x = (x - 1) / m_) c.path.push_back((x - 1) % m_);
  std::reverse(c.path.begin(), c.path.end());
  return c;
}

Vertex TreeShape::vertex(const TreeCoord& c) const {
  if (c.depth() > h_) throw std::invalid_argument("tree coordinate deeper than the tree");
  Vertex x = 0;
  for (std::size_t step : c.path) {
    if (step >= m_) throw std::invalid_argument("tree coordinate child index out of range");
    x = m_ * x + 1 + step;
  }
  return x;
}

std::size_t TreeShape::distance(Vertex x, Vertex y) const {
  std::size_t dx = depth(x), dy = depth(y), d = 0;
  while (dx > dy) { x = (x - 1) / m_; --dx; ++d; }
  while (dy > dx) { y = (y - 1) / m_; --dy; ++d; }
  while (x != y) { x = (x - 1) / m_; y = (y - 1) / m_; d += 2; }
  return d;
}

std::vector<Vertex> TreeShape::children(Vertex x) const {
  std::vector<Vertex> out;
  for (std::size_t c = 0; c < m_ && m_ * x + 1 + c < n_; ++c) out.push_back(m_ * x + 1 + c);
  return out;
}

std::vector<Vertex> TreeShape::level(std::size_t d) const {
  const std::size_t begin = d == 0 ? 0 : mary_tree_order(d - 1, m_);
  const std::size_t end = mary_tree_order(d, m_);
  std::vector<Vertex> out;
  for (Vertex x = begin; x < end; ++x) out.push_back(x);
  return out;
}

std::vector<std::string> TreeShape::labels() const {
  std::vector<std::string> out;
  for (Vertex x = 0; x < n_; ++x) out.push_back(coord(x).to_string());
  return out;
}

PathProfile path_profile(std::size_t h, std::size_t m, const TreeCoord& x, const TreeCoord& y) {
  const TreeShape shape(h, m);
  shape.vertex(x);  // validates
  shape.vertex(y);
  std::size_t common = 0;
  while (common < x.depth() && common < y.depth() && x.path[common] == y.path[common]) ++common;
  return PathProfile{x.depth() - common, y.depth() - common};
}

std::size_t ceil_log2(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("ceil_log2(0) is undefined");
  std::size_t i = 0;
  while ((std::uint64_t{1} << i) < s) ++i;
  return i;
}

SegmentIndex segment_index(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("segment_index: s must be >= 1");
  return SegmentIndex{ceil_log2(s)};
}

namespace {

bool is_sum_of_two(std::uint64_t s, const std::set<std::uint64_t>& parts) {
  for (std::uint64_t a : parts) {
    if (a >= s) break;
    if (parts.count(s - a)) return true;
  }
  return false;
}

std::set<std::uint64_t> segment_members(std::size_t i) {
  std::set<std::uint64_t> out;
  const SegmentIndex seg{i};
  for (std::uint64_t s = seg.lower_exclusive() + 1; s <= seg.upper(); ++s) out.insert(s);
  return out;
}

}  // namespace

bool segment_sum_property(std::size_t i) {
  if (i == 0 || i == 2) throw std::invalid_argument("segment_sum_property: i must be >= 1, != 2");
  std::set<std::uint64_t> parts = segment_members(i % 2 == 0 ? 1 : 0);
  for (std::uint64_t s : segment_members(i - 1)) parts.insert(s);
  for (std::uint64_t s : segment_members(i)) {
    if (!is_sum_of_two(s, parts)) return false;
  }
  return true;
}

bool segment_union_sum_property(std::size_t l) {
  if (l == 0) throw std::invalid_argument("segment_union_sum_property: l must be >= 1");
  std::set<std::uint64_t> targets, parts;
  for (std::size_t i = 0; i <= l; ++i) {
    if (i % 2 == l % 2) {
      for (std::uint64_t s : segment_members(i)) targets.insert(s);
    }
  }
  for (std::size_t i = 0; i + 1 <= l; ++i) {
    if (i % 2 == (l - 1) % 2) {
      for (std::uint64_t s : segment_members(i)) parts.insert(s);
    }
  }
  for (std::uint64_t s : targets) {
    if (s == 1 || s == 3) continue;
    if (!is_sum_of_two(s, parts)) return false;
  }
  return true;
}

Graph tree_m2_closed_form(std::size_t h, std::size_t m) {
  const TreeShape shape(h, m);
  GraphBuilder b(shape.order());
  for (Vertex x = 0; x < shape.order(); ++x) {
    for (Vertex y = x + 1; y < shape.order(); ++y) {
      if (shape.distance(x, y) == 4) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

TreeM2Report tree_m2_report(std::size_t h, std::size_t m) {
  require_tall(h, "tree_m2_report");
  const TreeShape shape(h, m);
  TreeM2Report r;
  r.h = h;
  r.m = m;
  r.m2 = metamour(metamour(mary_tree(h, m)));
  r.closed_form = tree_m2_closed_form(h, m);
  r.components = connected_components(r.m2);
  r.parity_split = r.components.size() == 2;
  for (const auto& comp : r.components) {
    const std::size_t parity = shape.depth(comp.front()) % 2;
    for (Vertex v : comp) r.parity_split = r.parity_split && shape.depth(v) % 2 == parity;
    const Distance d = diameter(induced_subgraph(r.m2, comp));
    r.component_diameters.push_back(d.is_infinite() ? 0 : d.value());
    r.max_diameter = std::max(r.max_diameter, r.component_diameters.back());
  }
  return r;
}

bool is_exceptional_pair(std::size_t h, std::size_t m, Vertex x, Vertex y) {
  // depth-1 vertices of a binary tree are 1 and 2
  return m == 2 && (h == 5 || h == 6) && x != y && x >= 1 && x <= 2 && y >= 1 && y <= 2;
}

TreeMkPredicate::TreeMkPredicate(std::size_t h, std::size_t m)
    : shape_((require_tall(h, "tree_mk_edge"), TreeShape(h, m))),
      dist_(distance_matrix(tree_m2_closed_form(h, m))) {}

bool TreeMkPredicate::edge(Vertex x, Vertex y, std::size_t k) const {
  if (k < 2) throw std::invalid_argument("tree_mk_edge: k must be >= 2");
  if (x == y || is_exceptional_pair(shape_.height(), shape_.arity(), x, y)) return false;
  const Distance d = dist_.at(x, y);
  if (d.is_infinite()) return false;
  const std::size_t i = ceil_log2(d.value());
  return i + 2 <= k && i % 2 == k % 2;
}

bool TreeMkPredicate::limit_edge(Vertex x, Vertex y, std::size_t k) const {
  if (x == y || is_exceptional_pair(shape_.height(), shape_.arity(), x, y)) return false;
  const Distance d = dist_.at(x, y);
  return !d.is_infinite() && ceil_log2(d.value()) % 2 == k % 2;
}

Graph TreeMkPredicate::graph(std::size_t k) const {
  GraphBuilder b(shape_.order());
  for (Vertex x = 0; x < shape_.order(); ++x) {
    for (Vertex y = x + 1; y < shape_.order(); ++y) {
      if (edge(x, y, k)) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

Graph TreeMkPredicate::limit_graph(std::size_t k) const {
  GraphBuilder b(shape_.order());
  for (Vertex x = 0; x < shape_.order(); ++x) {
    for (Vertex y = x + 1; y < shape_.order(); ++y) {
      if (limit_edge(x, y, k)) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

bool tree_mk_edge(std::size_t h, std::size_t m, Vertex x, Vertex y, std::size_t k) {
  return TreeMkPredicate(h, m).edge(x, y, k);
}

TreeLimitProfile tree_limit_profile(std::size_t h, std::size_t m) {
  require_tall(h, "tree_limit_profile");
  const TreeMkPredicate pred(h, m);
  return TreeLimitProfile{ceil_log2(h), pred.limit_graph(0), pred.limit_graph(1)};
}

std::size_t small_tree_onset(std::size_t h, std::size_t m) {
  switch (h) {
    case 1: return 2;
    case 2: return 4;
    case 3: return 6;
    case 4: return m == 2 ? 4 : 6;
    default: throw std::invalid_argument("small_tree_onset: h must be in [1, 4]");
  }
}

std::optional<SmallTreeExpectation> small_tree_expected(std::size_t h, std::size_t m,
                                                        std::size_t k) {
  if (h < 1 || h > 4) throw std::invalid_argument("small_tree_expected: h must be in [1, 4]");
  const TreeShape shape(h, m);
  const std::size_t n = shape.order();
  if (k == 0) return SmallTreeExpectation{mary_tree(h, m), "T(" + std::to_string(h) + "," +
                                                               std::to_string(m) + ")"};
  const std::string mm = std::to_string(m);
  if (h <= 3 && k >= small_tree_onset(h, m)) {
    return SmallTreeExpectation{edgeless(n), k_name("co-K", n)};
  }
  GraphBuilder b(n);
  switch (h) {
    case 1:
      add_clique(b, shape.level(1));
      return SmallTreeExpectation{std::move(b).build(), "K" + mm + " u K1"};
    case 2:
      if (k == 1) {
        add_clique(b, shape.level(1));
        // m blades K_{m+1}, each a sibling group of grandchildren plus the root
        for (Vertex c : shape.children(0)) {
          std::vector<Vertex> blade = shape.children(c);
          blade.push_back(0);
          add_clique(b, blade);
        }
        return SmallTreeExpectation{std::move(b).build(),
                                    "K" + mm + " u Wd(" + mm + " x K" + std::to_string(m + 1) + ")"};
      }
      if (k == 2) {
        for (Vertex x : shape.level(2)) {
          for (Vertex y : shape.level(2)) {
            if (x < y && (x - 1) / m != (y - 1) / m) b.add_edge(x, y);
          }
        }
        return SmallTreeExpectation{std::move(b).build(),
                                    "(co-K" + mm + ")^join" + mm + " u co-K" + std::to_string(m + 1)};
      }
      for (Vertex c : shape.children(0)) add_clique(b, shape.children(c));
      return SmallTreeExpectation{std::move(b).build(),
                                  "(K" + mm + ")^u" + mm + " u co-K" + std::to_string(m + 1)};
    case 3:
      if (k != 5) return std::nullopt;
      for (Vertex p : shape.level(2)) add_clique(b, shape.children(p));
      return SmallTreeExpectation{std::move(b).build(), "(K" + mm + ")^u" +
                                                            std::to_string(m * m) + " u co-K" +
                                                            std::to_string(m * m + m + 1)};
    default: {
      if (k < small_tree_onset(h, m)) return std::nullopt;
      // limit graphs follow the parity criterion on M^2 distances
      const DistanceMatrix d = distance_matrix(tree_m2_closed_form(h, m));
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          const Distance dxy = d.at(x, y);
          if (!dxy.is_infinite() && ceil_log2(dxy.value()) % 2 == k % 2) b.add_edge(x, y);
        }
      }
      return SmallTreeExpectation{std::move(b).build(),
                                  std::string("limit graph, ") + (k % 2 ? "odd" : "even")};
    }
  }
}

}  // namespace metamour
