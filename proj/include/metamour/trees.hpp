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

// Closed forms for metamour iterates of complete m-ary trees T(h, m).
// Vertex ids follow mary_tree(): root 0, children of x are m*x+1 .. m*x+m.

#ifndef METAMOUR_TREES_HPP_
#define METAMOUR_TREES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

struct TreeCoord {
  std::vector<std::size_t> path;  // child indices from the root

  std::size_t depth() const { return path.size(); }
  std::string to_string() const;  // "r", "r.0", "r.0.2", ...
  friend bool operator==(const TreeCoord&, const TreeCoord&) = default;
};

class TreeShape {
 public:
  TreeShape(std::size_t h, std::size_t m);

  std::size_t height() const { return h_; }
  std::size_t arity() const { return m_; }
  std::size_t order() const { return n_; }

  std::size_t depth(Vertex x) const;
  TreeCoord coord(Vertex x) const;
  // Throws std::invalid_argument for paths that leave the tree.
  Vertex vertex(const TreeCoord& c) const;
  std::size_t distance(Vertex x, Vertex y) const;
  std::vector<Vertex> children(Vertex x) const;
  std::vector<Vertex> level(std::size_t d) const;
  std::vector<std::string> labels() const;

 private:
  std::size_t h_, m_, n_;
};

struct PathProfile {
  std::size_t p;  // steps up to the lowest common ancestor
  std::size_t q;  // steps down from it
  friend bool operator==(const PathProfile&, const PathProfile&) = default;
};

PathProfile path_profile(std::size_t h, std::size_t m, const TreeCoord& x, const TreeCoord& y);

// S_i = (2^{i-1}, 2^i], so s lies in S_i exactly when ceil(log2 s) = i.
struct SegmentIndex {
  std::size_t i;
  std::uint64_t lower_exclusive() const { return i == 0 ? 0 : std::uint64_t{1} << (i - 1); }
  std::uint64_t upper() const { return std::uint64_t{1} << i; }
  bool contains(std::uint64_t s) const { return s > lower_exclusive() && s <= upper(); }
};

SegmentIndex segment_index(std::uint64_t s);
std::size_t ceil_log2(std::uint64_t s);

// Every element of S_i is a sum of two elements of S_1 u S_{i-1} (i even)
// or S_0 u S_{i-1} (i odd). Checked by exhaustive search; i != 2, i >= 1.
bool segment_sum_property(std::size_t i);
// Every element of the parity-l segment union up to l, apart from 1 and 3,
// is a sum of two elements of the opposite-parity union up to l-1.
bool segment_union_sum_property(std::size_t l);

// M^2(T) via the tree-distance-4 criterion.
Graph tree_m2_closed_form(std::size_t h, std::size_t m);

struct TreeM2Report {
  std::size_t h = 0, m = 0;
  Graph m2{0};           // metamour applied twice
  Graph closed_form{0};  // d_T = 4
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> component_diameters;
  std::size_t max_diameter = 0;
  bool parity_split = false;  // components are exactly the even and odd depths
};

// Requires h >= 5.
TreeM2Report tree_m2_report(std::size_t h, std::size_t m);

// Depth-1 pair in T(h, 2) with h in {5, 6}: never an edge of M^k, k >= 2.
bool is_exceptional_pair(std::size_t h, std::size_t m, Vertex x, Vertex y);

// Closed-form edge predicate for M^k(T), k >= 2, h >= 5. Distances in M^2(T)
// are computed once, by BFS on the closed-form M^2.
class TreeMkPredicate {
 public:
  TreeMkPredicate(std::size_t h, std::size_t m);

  bool edge(Vertex x, Vertex y, std::size_t k) const;
  // Parity criterion for the limit graphs (valid for k >= limit start).
  bool limit_edge(Vertex x, Vertex y, std::size_t k) const;
  Graph graph(std::size_t k) const;
  Graph limit_graph(std::size_t k) const;
  Distance m2_distance(Vertex x, Vertex y) const { return dist_.at(x, y); }
  const TreeShape& shape() const { return shape_; }

 private:
  TreeShape shape_;
  DistanceMatrix dist_;
};

bool tree_mk_edge(std::size_t h, std::size_t m, Vertex x, Vertex y, std::size_t k);

struct TreeLimitProfile {
  std::size_t start = 0;  // ceil(log2 h)
  Graph even_limit{0};    // M^k for even k >= start
  Graph odd_limit{0};     // M^k for odd k >= start
};

TreeLimitProfile tree_limit_profile(std::size_t h, std::size_t m);

struct SmallTreeExpectation {
  Graph graph{0};
  std::string shape;
};

// First k from which M^k(T(h, m)) repeats with period dividing 2, h <= 4.
std::size_t small_tree_onset(std::size_t h, std::size_t m);

// The graph M^k(T(h, m)) for h <= 4 as the closed description states it:
// h = 1, 2 every k; h = 3 for k = 0 and k >= 5; h = 4 for k = 0 and k from
// the onset, using the parity criterion on M^2 distances. Absent otherwise.
// This is the stated formula, not the iterate: it is wrong for T(3,2) at
// k = 5 and for the T(4,m) limit graphs. Throws for h outside [1, 4].
std::optional<SmallTreeExpectation> small_tree_expected(std::size_t h, std::size_t m,
                                                        std::size_t k);

}  // namespace metamour

#endif  // METAMOUR_TREES_HPP_
