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

#ifndef METAMOUR_DYNAMICS_HPP_
#define METAMOUR_DYNAMICS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "metamour/graph.hpp"

namespace metamour {

class OrbitBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOrbitSteps = 100000;

// Least k >= 1 with 2^k = +1 or -1 (mod n). n must be odd and >= 3.
std::size_t mu(std::size_t n);

Graph metamour_iterate(const Graph& g, std::size_t k);

struct OrbitReport {
  std::vector<Graph> iterates;  // M^0 .. M^{N+k-1}
  std::size_t preperiod = 0;    // N
  std::size_t period = 0;       // k

  // M^i for any i >= 0, folding indices past the cycle back into it.
  const Graph& at(std::size_t i) const;
  std::vector<Graph> limit_set() const;
};

// Iterates M until an adjacency encoding repeats. Throws OrbitBoundError if
// no repeat occurs within max_steps applications.
OrbitReport orbit(const Graph& g, std::size_t max_steps = kDefaultOrbitSteps);

std::optional<std::size_t> metamour_period(const Graph& g,
                                           std::size_t max_steps = kDefaultOrbitSteps);

// Least k >= 1 with M^k(G) isomorphic to G. Once the orbit is inside its
// cycle every later iterate repeats one already examined, so k <= N + period
// covers every candidate.
std::optional<std::size_t> pseudo_metamour_period(const Graph& g,
                                                  std::size_t max_steps = kDefaultOrbitSteps);
std::optional<std::size_t> pseudo_metamour_period(const OrbitReport& report);

// Closed form for M^k(C_n), n odd >= 5: edges v_i v_{i + 2^k mod n}.
Graph cycle_power_edges(std::size_t n, std::size_t k);

struct PeriodProfile {
  std::size_t n;
  std::size_t mu;
  std::size_t cycle_period;
};

PeriodProfile period_profile(std::size_t n);

}  // namespace metamour

#endif  // METAMOUR_DYNAMICS_HPP_
