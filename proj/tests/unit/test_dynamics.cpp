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

#include <random>

#include "doctest.h"
#include "metamour/canonical.hpp"
#include "metamour/constructions.hpp"
#include "metamour/dynamics.hpp"
#include "oracles.hpp"

using namespace metamour;

namespace {

Graph dream_catcher() {
  std::vector<Graph> blocks(7, edgeless(2));
  return join_along(cycle(7), blocks);
}

}  // namespace

TEST_CASE("mu values") {
  const std::vector<std::size_t> listed{
      1,  2,  3,  3,  5,  6,  4,  4,  9,  6,  11, 10, 9,  14, 5,  5,  12, 18, 12, 10, 7,  12,
      23, 21, 8,  26, 20, 9,  29, 30, 6,  6,  33, 22, 35, 9,  20, 30, 39, 27, 41, 8,  28, 11};
  REQUIRE(listed.size() == 44);
  for (std::size_t i = 0; i < listed.size(); ++i) CHECK(mu(3 + 2 * i) == listed[i]);
  CHECK(mu(31) == 5);
  CHECK(mu(15) == 4);
  CHECK_THROWS(mu(8));
  CHECK_THROWS(mu(1));
}

TEST_CASE("metamour_iterate") {
  Graph g = c5hat();
  CHECK(metamour_iterate(g, 0) == g);
  CHECK(metamour_iterate(cycle(5), 2) == cycle(5));
  CHECK(metamour_iterate(cycle(7), 3) == cycle(7));
}

TEST_CASE("orbits") {
  OrbitReport r = orbit(cycle(12));
  CHECK(r.preperiod == 3);
  CHECK(r.period == 1);
  REQUIRE(r.limit_set().size() == 1);
  CHECK(r.limit_set()[0] == edgeless(12));
  CHECK(connected_components(r.iterates[1]).size() == 2);
  CHECK(connected_components(r.iterates[2]).size() == 4);
  OrbitReport c7 = orbit(cycle(7));
  CHECK(c7.preperiod == 0);
  CHECK(c7.period == 3);
  OrbitReport k5 = orbit(complete(5));
  CHECK(k5.preperiod == 1);
  CHECK(k5.period == 1);
  CHECK(k5.limit_set()[0] == edgeless(5));
  CHECK_THROWS_AS(orbit(cycle(7), 2), OrbitBoundError);
  CHECK(orbit(cycle(7), 3).period == 3);
}

TEST_CASE("orbit report invariants on random graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(1 + rng() % 14, 0.3, rng);
    OrbitReport r = orbit(g);
    const std::size_t N = r.preperiod, k = r.period;
    CHECK(metamour::metamour(r.iterates.back()) == r.iterates[N]);
    if (N > 0) CHECK(r.at(N - 1 + k) != r.iterates[N - 1]);
    for (std::size_t d = 1; d < k; ++d) CHECK(r.at(N + d) != r.iterates[N]);
    for (std::size_t i = 0; i < r.iterates.size(); ++i) {
      CHECK(r.iterates[i] == oracle::iterate_fw(g, i));
    }
    // same report regardless of the bound
    OrbitReport again = orbit(g, r.iterates.size() + 5);
    CHECK(again.preperiod == N);
    CHECK(again.period == k);
    CHECK(again.iterates == r.iterates);
    auto mp = metamour_period(g);
    CHECK(mp.has_value() == (N == 0));
    auto pp = pseudo_metamour_period(r);
    if (mp) {
      REQUIRE(pp.has_value());
      CHECK(*pp <= *mp);
    }
    if (pp) CHECK(*pp <= N + k);
  }
}

TEST_CASE("periods") {
  CHECK(metamour_period(cycle(9)) == std::optional<std::size_t>(3));
  CHECK_FALSE(metamour_period(complete(5)).has_value());
  Graph dc = dream_catcher();
  CHECK(metamour_period(dc) == std::optional<std::size_t>(6));
  CHECK(pseudo_metamour_period(cycle(11)) == std::optional<std::size_t>(1));
  CHECK(pseudo_metamour_period(paley(13)) == std::optional<std::size_t>(1));
  CHECK(pseudo_metamour_period(dc) == std::optional<std::size_t>(2));
}

TEST_CASE("only edgeless graphs are fixed, up to 7 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      Graph g = oracle::from_mask(n, m);
      CHECK((metamour::metamour(g) == g) == g.is_edgeless());
    }
  }
}

TEST_CASE("cycle power closed form") {
  Graph c = cycle_power_edges(7, 1);
  for (Vertex i = 0; i < 7; ++i) CHECK(c.adjacent(i, (i + 2) % 7));
  CHECK(cycle_power_edges(9, 3) == cycle(9));
  for (std::size_t n = 5; n <= 15; n += 2) {
    for (std::size_t k = 0; k <= 6; ++k) {
      CHECK(cycle_power_edges(n, k) == oracle::iterate_fw(cycle(n), k));
    }
  }
  CHECK_THROWS(cycle_power_edges(3, 1));
  CHECK_THROWS(cycle_power_edges(8, 1));
}

TEST_CASE("odd cycle period law") {
  for (std::size_t n = 5; n <= 21; n += 2) {
    PeriodProfile p = period_profile(n);
    CHECK(p.cycle_period == p.mu);
    for (std::size_t k = 0; k <= 2 * p.mu; ++k) {
      for (std::size_t l = 0; l <= 2 * p.mu; ++l) {
        CHECK((metamour_iterate(cycle(n), k) == metamour_iterate(cycle(n), l)) ==
              (k % p.mu == l % p.mu));
      }
    }
  }
}
