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

#include "metamour/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace metamour {

namespace {

// Ordered partition of 0..n-1 into contiguous cells of `lab`.
struct Partition {
  std::vector<Vertex> lab;          // position -> vertex
  std::vector<std::size_t> pos;     // vertex -> position
  std::vector<std::size_t> cell;    // vertex -> start position of its cell
  std::vector<std::size_t> end;     // cell start -> one past its last position
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
  std::size_t cell_size(std::size_t start) const { return end[start] - start; }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller id stays root
  }

 private:
  std::vector<std::size_t> parent_;
};

class Search {
 public:
  Search(const Graph& g, std::span<const std::size_t> colors)
      : g_(g), n_(g.order()), stride_(g.words_per_row()),
        counts_(n_, 0), wbits_(stride_, 0) {
    Partition p = initial_partition(colors);
    std::vector<std::size_t> queue;
    for (std::size_t c = 0; c < n_; c = p.end[c]) queue.push_back(c);
    refine(p, queue);
    std::vector<Vertex> path;
    descend(p, path);
  }

  CanonicalLabeling result() && {
    CanonicalLabeling out;
    out.form.n = n_;
    out.form.rows = std::move(best_rows_);
    out.order = best_order_;
    out.label.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) out.label[best_order_[i]] = i;
    out.generators = std::move(generators_);
    return out;
  }

 private:
  Partition initial_partition(std::span<const std::size_t> colors) const {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(p.lab.begin(), p.lab.end(),
                       [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    }
    p.pos.assign(n_, 0);
    p.cell.assign(n_, 0);
    p.end.assign(n_, 0);
    std::size_t start = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      p.pos[p.lab[i]] = i;
      const bool boundary =
          i + 1 == n_ || (!colors.empty() && colors[p.lab[i]] != colors[p.lab[i + 1]]);
      if (boundary) {
        for (std::size_t j = start; j <= i; ++j) p.cell[p.lab[j]] = start;
        p.end[start] = i + 1;
        ++p.cells;
        start = i + 1;
      }
    }
    return p;
  }

  // Splits cells by neighbor counts into splitter cells until the partition
  // is equitable. Fragments of a split cell are ordered by ascending count.
  void refine(Partition& p, std::vector<std::size_t>& queue) {
    std::vector<char> queued(n_, 0);
    for (std::size_t s : queue) queued[s] = 1;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::size_t s = queue[head++];
      queued[s] = 0;
      std::fill(wbits_.begin(), wbits_.end(), 0);
      for (std::size_t i = s; i < p.end[s]; ++i) {
        const Vertex w = p.lab[i];
        wbits_[w / kWordBits] |= Word{1} << (w % kWordBits);
      }
      for (std::size_t c = 0; c < n_;) {
        const std::size_t ce = p.end[c];
        if (ce - c > 1) split_cell(p, c, ce, queue, queued);
        c = ce;
      }
    }
  }

  void split_cell(Partition& p, std::size_t c, std::size_t ce,
                  std::vector<std::size_t>& queue, std::vector<char>& queued) {
    bool uniform = true;
    for (std::size_t i = c; i < ce; ++i) {
      const Vertex v = p.lab[i];
      auto r = g_.row(v);
      std::size_t k = 0;
      for (std::size_t w = 0; w < stride_; ++w) {
        k += static_cast<std::size_t>(std::popcount(r[w] & wbits_[w]));
      }
      counts_[v] = k;
      if (counts_[v] != counts_[p.lab[c]]) uniform = false;
    }
    if (uniform) return;
    std::sort(p.lab.begin() + static_cast<std::ptrdiff_t>(c),
              p.lab.begin() + static_cast<std::ptrdiff_t>(ce),
              [&](Vertex a, Vertex b) {
                return counts_[a] != counts_[b] ? counts_[a] < counts_[b] : a < b;
              });
    std::size_t start = c;
    for (std::size_t i = c; i < ce; ++i) {
      const Vertex v = p.lab[i];
      p.pos[v] = i;
      const bool boundary = i + 1 == ce || counts_[p.lab[i + 1]] != counts_[v];
      if (boundary) {
        for (std::size_t j = start; j <= i; ++j) p.cell[p.lab[j]] = start;
        p.end[start] = i + 1;
        if (start != c) ++p.cells;
        if (!queued[start]) {
          queued[start] = 1;
          queue.push_back(start);
        }
        start = i + 1;
      }
    }
  }

  std::optional<std::size_t> target_cell(const Partition& p) const {
    for (std::size_t c = 0; c < n_; c = p.end[c]) {
      if (p.cell_size(c) > 1) return c;
    }
    return std::nullopt;
  }

  void individualize(Partition& p, Vertex v) {
    const std::size_t c = p.cell[v];
    const std::size_t ce = p.end[c];
    const std::size_t at = p.pos[v];
    std::swap(p.lab[at], p.lab[c]);
    p.pos[p.lab[at]] = at;
    p.pos[v] = c;
    p.end[c] = c + 1;
    p.end[c + 1] = ce;
    for (std::size_t i = c + 1; i < ce; ++i) p.cell[p.lab[i]] = c + 1;
    ++p.cells;
    std::vector<std::size_t> queue{c};
    refine(p, queue);
  }

  std::vector<Word> certificate(const Partition& p) const {
    std::vector<Word> rows(n_ * stride_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto r = g_.row(p.lab[i]);
      Word* out = rows.data() + i * stride_;
      for (std::size_t w = 0; w < stride_; ++w) {
        Word bits = r[w];
        while (bits != 0) {
          const Vertex y = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          const std::size_t j = p.pos[y];
          out[j / kWordBits] |= Word{1} << (j % kWordBits);
          bits &= bits - 1;
        }
      }
    }
    return rows;
  }

  void add_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Returns the depth to resume at: a value below the caller's depth means
  // unwind, because the current subtree is an automorphic image of one
  // already searched.
  std::size_t descend(Partition& p, std::vector<Vertex>& path) {
    const std::size_t depth = path.size();
    if (p.discrete()) return visit_leaf(p, path);
    const std::size_t c = *target_cell(p);
    std::vector<Vertex> children(p.lab.begin() + static_cast<std::ptrdiff_t>(c),
                                 p.lab.begin() + static_cast<std::ptrdiff_t>(p.end[c]));
    std::sort(children.begin(), children.end());
    std::vector<Vertex> tried;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::vector<Vertex> reps;
    for (Vertex v : children) {
      if (!tried.empty()) {
        if (gens_seen != generators_.size()) {
          reps = stabilizer_orbits(path);
          gens_seen = generators_.size();
        }
        const bool equivalent = std::any_of(tried.begin(), tried.end(), [&](Vertex t) {
          return reps[t] == reps[v];
        });
        if (equivalent) continue;
      }
      tried.push_back(v);
      Partition child = p;
      individualize(child, v);
      path.push_back(v);
      const std::size_t resume = descend(child, path);
      path.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  std::size_t visit_leaf(const Partition& p, const std::vector<Vertex>& path) {
    std::vector<Word> cert = certificate(p);
    if (first_order_.empty()) {
      first_order_ = p.lab;
      first_rows_ = cert;
      first_path_ = path;
      best_order_ = p.lab;
      best_rows_ = std::move(cert);
      return path.size();
    }
    if (cert == first_rows_) {
      add_automorphism(first_order_, p.lab);
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() &&
             path[common] == first_path_[common]) {
        ++common;
      }
      return common;
    }
    if (cert == best_rows_) {
      add_automorphism(best_order_, p.lab);
      return path.size();
    }
    if (cert < best_rows_) {
      best_rows_ = std::move(cert);
      best_order_ = p.lab;
    }
    return path.size();
  }

  // Orbits of the subgroup generated by the known automorphisms that fix
  // every vertex of `path`.
  std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex>& path) const {
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    std::vector<Vertex> reps(n_);
    for (Vertex v = 0; v < n_; ++v) reps[v] = uf.find(v);
    return reps;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::size_t> counts_;
  std::vector<Word> wbits_;

  std::vector<Vertex> first_order_;
  std::vector<Word> first_rows_;
  std::vector<Vertex> first_path_;
  std::vector<Vertex> best_order_;
  std::vector<Word> best_rows_;
  std::vector<std::vector<Vertex>> generators_;
};

void check_size(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw SizeLimitError("canonical labeling supports at most " +
                         std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                         std::to_string(g.order()));
  }
}

}  // namespace

Graph CanonicalForm::to_graph() const {
  GraphBuilder b(n);
  const std::size_t stride = words_for(n);
  for (Vertex x = 0; x < n; ++x) {
    auto r = b.row(x);
    for (std::size_t w = 0; w < stride; ++w) r[w] = rows[x * stride + w];
  }
  return std::move(b).build();
}

std::size_t CanonicalForm::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ n;
  for (Word w : rows) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const std::size_t> colors) {
  check_size(g);
  if (!colors.empty() && colors.size() != g.order()) {
    throw GraphError("canonical_labeling: color vector size does not match vertex count");
  }
  if (g.order() == 0) return CanonicalLabeling{};
  return Search(g, colors).result();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  check_size(g);
  check_size(h);
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g == h) return true;
  std::vector<std::size_t> dg(g.order()), dh(h.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Vertex> orbit_representatives(
    std::size_t n, const std::vector<std::vector<Vertex>>& generators) {
  UnionFind uf(n);
  for (const auto& gamma : generators) {
    for (Vertex v = 0; v < n; ++v) uf.unite(v, gamma[v]);
  }
  std::vector<Vertex> reps(n);
  for (Vertex v = 0; v < n; ++v) reps[v] = uf.find(v);
  return reps;
}

}  // namespace metamour
