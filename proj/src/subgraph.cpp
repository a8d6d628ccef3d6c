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

#include "metamour/subgraph.hpp"

namespace metamour {

namespace {

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced),
        map_(pattern.order(), 0), used_(host.order(), false) {
    for (Vertex v = 0; v < host.order(); ++v) host_degree_.push_back(host.degree(v));
    for (Vertex p = 0; p < pattern.order(); ++p) {
      pattern_degree_.push_back(pattern.degree(p));
    }
  }

  bool extend(Vertex p) {
    if (p == pattern_.order()) return true;
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (used_[h] || host_degree_[h] < pattern_degree_[p]) continue;
      if (!consistent(p, h)) continue;
      map_[p] = h;
      used_[h] = true;
      if (extend(p + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  std::vector<Vertex> take() && { return std::move(map_); }

 private:
  bool consistent(Vertex p, Vertex h) const {
    for (Vertex q = 0; q < p; ++q) {
      const bool pe = pattern_.adjacent(p, q);
      const bool he = host_.adjacent(h, map_[q]);
      if (pe && !he) return false;
      if (induced_ && !pe && he) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool induced_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> host_degree_;
  std::vector<std::size_t> pattern_degree_;
};

}  // namespace

std::optional<std::vector<Vertex>> subgraph_search(const Graph& host,
                                                   const Graph& pattern,
                                                   bool induced) {
  if (pattern.order() > host.order()) return std::nullopt;
  Matcher m(host, pattern, induced);
  if (!m.extend(0)) return std::nullopt;
  return std::move(m).take();
}

}  // namespace metamour
