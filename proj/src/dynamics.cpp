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

#include "metamour/dynamics.hpp"

#include <string>
#include <unordered_map>

#include "metamour/canonical.hpp"
#include "metamour/constructions.hpp"

namespace metamour {

namespace {

void require_odd(std::size_t n, std::size_t least, const char* who) {
  if (n % 2 == 0 || n < least) {
    throw std::invalid_argument(std::string(who) + ": n must be odd and >= " +
                                std::to_string(least) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::size_t mu(std::size_t n) {
  require_odd(n, 3, "mu");
  std::size_t r = 1;
  for (std::size_t k = 1;; ++k) {
    r = (2 * r) % n;
    if (r == 1 || r == n - 1) return k;
  }
}

Graph metamour_iterate(const Graph& g, std::size_t k) {
  Graph out = g;
  for (std::size_t i = 0; i < k; ++i) out = metamour(out);
  return out;
}

const Graph& OrbitReport::at(std::size_t i) const {
  if (i < iterates.size()) return iterates[i];
  return iterates[preperiod + (i - preperiod) % period];
}

std::vector<Graph> OrbitReport::limit_set() const {
  return {iterates.begin() + static_cast<std::ptrdiff_t>(preperiod), iterates.end()};
}

OrbitReport orbit(const Graph& g, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("orbit: max_steps must be >= 1");
  OrbitReport r;
  std::unordered_map<Graph, std::size_t> seen;
  r.iterates.push_back(g);
  seen.emplace(g, 0);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    Graph next = metamour(r.iterates.back());
    auto it = seen.find(next);
    if (it != seen.end()) {
      r.preperiod = it->second;
      r.period = step - it->second;
      return r;
    }
    seen.emplace(next, step);
    r.iterates.push_back(std::move(next));
  }
  throw OrbitBoundError("orbit: no repeated iterate within " + std::to_string(max_steps) +
                        " steps");
}

std::optional<std::size_t> metamour_period(const Graph& g, std::size_t max_steps) {
  OrbitReport r = orbit(g, max_steps);
  if (r.preperiod != 0) return std::nullopt;
  return r.period;
}

std::optional<std::size_t> pseudo_metamour_period(const OrbitReport& report) {
  const Graph& g = report.iterates.front();
  const std::size_t last = report.preperiod + report.period;
  for (std::size_t k = 1; k <= last; ++k) {
    const Graph& h = report.at(k);
    if (h.size() == g.size() && is_isomorphic(h, g)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> pseudo_metamour_period(const Graph& g, std::size_t max_steps) {
  return pseudo_metamour_period(orbit(g, max_steps));
}

Graph cycle_power_edges(std::size_t n, std::size_t k) {
  require_odd(n, 5, "cycle_power_edges");
  std::size_t step = 1;
  for (std::size_t i = 0; i < k; ++i) step = (2 * step) % n;
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + step) % n);
  return std::move(b).build();
}

PeriodProfile period_profile(std::size_t n) {
  require_odd(n, 5, "period_profile");
  auto p = metamour_period(cycle(n));
  return PeriodProfile{n, mu(n), p.value_or(0)};
}

}  // namespace metamour
