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

// Canonical labeling by individualization-refinement.
//
// The search tree is built from equitable ordered partitions: refinement
// splits cells by neighbor counts into other cells, and each non-discrete
// node branches on the vertices of its first non-singleton cell. Every leaf
// induces a relabeling; the canonical form is the minimum relabeled
// adjacency encoding over all leaves. Subtrees are pruned only through
// automorphisms discovered during the search (leaf certificates that
// coincide), so the minimum is the same as for the unpruned tree.

#ifndef METAMOUR_CANONICAL_HPP_
#define METAMOUR_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

// Largest vertex count accepted by canonical_form / is_isomorphic.
inline constexpr std::size_t kMaxCanonicalVertices = 256;

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Encoding of an isomorphism class: the relabeled adjacency rows of the
// canonical leaf, row-major.
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<Word> rows;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  // Graph on 0..n-1 with the canonical labeling applied.
  Graph to_graph() const;
  std::size_t hash() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // order[i] is the input vertex that receives canonical label i.
  std::vector<Vertex> order;
  // label[v] is the canonical label of input vertex v.
  std::vector<Vertex> label;
  // Automorphisms found during the search; they generate Aut(G) (restricted
  // to the initial coloring, when one is given).
  std::vector<std::vector<Vertex>> generators;
};

// `colors` (optional, one value per vertex) fixes an initial ordered
// partition; vertices only map to vertices of the same color. Throws
// SizeLimitError when the graph exceeds kMaxCanonicalVertices.
CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const std::size_t> colors = {});

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// Orbit representative (smallest member) of every vertex under the group
// generated by `generators`.
std::vector<Vertex> orbit_representatives(
    std::size_t n, const std::vector<std::vector<Vertex>>& generators);

}  // namespace metamour

template <>
struct std::hash<metamour::CanonicalForm> {
  std::size_t operator()(const metamour::CanonicalForm& f) const {
    return f.hash();
  }
};

#endif  // METAMOUR_CANONICAL_HPP_
