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

#include "metamour/enumerate.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_set>

#include "metamour/canonical.hpp"

namespace metamour {

namespace {

void require_order(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw EnumerationError("graph enumeration supports n <= " +
                           std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

// Isomorphism-invariant key; the deletion vertex maximizes it.
std::pair<std::size_t, std::size_t> vertex_key(const Graph& g, Vertex x) {
  std::size_t s = 0;
  for (Vertex y : g.neighbors(x)) s += g.degree(y);
  return {g.degree(x), s};
}

bool same_orbit(const Graph& g, const CanonicalLabeling& lab, Vertex a, Vertex b) {
  const std::vector<Vertex> reps = orbit_representatives(g.order(), lab.generators);
  if (reps[a] == reps[b]) return true;
  std::vector<std::size_t> ca(g.order(), 1), cb(g.order(), 1);
  ca[a] = 0;
  cb[b] = 0;
  return canonical_labeling(g, ca).form == canonical_labeling(g, cb).form;
}

// The last vertex of g was just added. Accept iff it is equivalent to the
// canonical deletion vertex.
bool accept_child(const Graph& g, CanonicalLabeling& lab) {
  const std::size_t n = g.order();
  const Vertex v = n - 1;
  const auto kv = vertex_key(g, v);
  std::vector<Vertex> ties;
  for (Vertex x = 0; x < n; ++x) {
    const auto kx = vertex_key(g, x);
    if (kx > kv) return false;
    if (kx == kv) ties.push_back(x);
  }
  lab = canonical_labeling(g);
  if (ties.size() == 1) return true;
  const Vertex w = *std::max_element(ties.begin(), ties.end(), [&](Vertex a, Vertex b) {
    return lab.label[a] < lab.label[b];
  });
  return w == v || same_orbit(g, lab, v, w);
}

Graph extend(const Graph& parent, std::uint32_t mask) {
  const std::size_t n = parent.order();
  GraphBuilder b(n + 1);
  for (const auto& [x, y] : parent.edges()) b.add_edge(x, y);
  for (Vertex x = 0; x < n; ++x) {
    if ((mask >> x) & 1U) b.add_edge(x, n);
  }
  return std::move(b).build();
}

// Children of `parent`, in mask order, one per class.
std::vector<Graph> children(const Graph& parent) {
  const std::size_t n = parent.order();
  std::vector<Graph> out;
  std::unordered_set<CanonicalForm> seen;
  CanonicalLabeling lab;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Graph g = extend(parent, mask);
    if (!accept_child(g, lab)) continue;
    if (seen.insert(lab.form).second) out.push_back(std::move(g));
  }
  return out;
}

// Depth-first walk to `target` order. Returns false when the visitor stopped.
bool descend(const Graph& g, std::size_t target, bool connected_only, const GraphVisitor& visit,
             std::size_t& count) {
  if (g.order() == target) {
    if (connected_only && !is_connected(g)) return true;
    ++count;
    return visit(g);
  }
  for (const Graph& c : children(g)) {
    if (!descend(c, target, connected_only, visit, count)) return false;
  }
  return true;
}

std::vector<Graph> level(std::size_t n) {
  std::vector<Graph> cur{Graph(n == 0 ? 0 : 1)};
  if (n == 0) return cur;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Graph> next;
    for (const Graph& p : cur) {
      for (Graph& c : children(p)) next.push_back(std::move(c));
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::size_t enumerate_graphs(std::size_t n, bool connected_only, const GraphVisitor& visit) {
  require_order(n);
  std::size_t count = 0;
  if (n == 0) {
    ++count;
    visit(Graph(0));
    return count;
  }
  descend(Graph(1), n, connected_only, visit, count);
  return count;
}

std::size_t enumerate_graphs_upto(std::size_t n_max, bool connected_only,
                                  const GraphVisitor& visit) {
  require_order(n_max);
  std::size_t count = 0;
  bool go = true;
  for (std::size_t n = 1; n <= n_max && go; ++n) {
    count += enumerate_graphs(n, connected_only, [&](const Graph& g) {
      go = visit(g);
      return go;
    });
  }
  return count;
}

std::vector<Graph> all_graphs(std::size_t n, bool connected_only) {
  std::vector<Graph> out;
  enumerate_graphs(n, connected_only, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

ScanResult parallel_scan(std::size_t n_max, bool connected_only, std::size_t jobs,
                         const std::function<bool(const Graph&)>& pred) {
  require_order(n_max);
  if (jobs == 0) jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  ScanResult result;
  // Small orders run inline; the last order fans out over its parents.
  if (n_max >= 2) {
    enumerate_graphs_upto(n_max - 1, connected_only, [&](const Graph& g) {
      ++result.scanned;
      if (pred(g)) result.matches.push_back(g);
      return true;
    });
  }
  if (n_max == 0) return result;
  const std::vector<Graph> parents = n_max >= 2 ? level(n_max - 1) : std::vector<Graph>{};
  if (n_max == 1) {
    ++result.scanned;
    if (pred(Graph(1))) result.matches.push_back(Graph(1));
    return result;
  }
  struct Slot {
    std::vector<Graph> matches;
    std::size_t scanned = 0;
  };
  std::vector<Slot> slots(parents.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < parents.size(); i += jobs) {
      for (Graph& c : children(parents[i])) {
        if (connected_only && !is_connected(c)) continue;
        ++slots[i].scanned;
        if (pred(c)) slots[i].matches.push_back(std::move(c));
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (Slot& s : slots) {
    result.scanned += s.scanned;
    for (Graph& g : s.matches) result.matches.push_back(std::move(g));
  }
  return result;
}

}  // namespace metamour
