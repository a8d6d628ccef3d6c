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
#include "metamour/constructions.hpp"
#include "metamour/dynamics.hpp"
#include "metamour/walks.hpp"
#include "oracles.hpp"

using namespace metamour;

TEST_CASE("level one is the metamour graph") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      Graph g = oracle::from_mask(n, m);
      FmRelation rel = FmRelation::compute(g, 1);
      CHECK(rel.reach(1) == metamour::metamour(g));
      CHECK(fully_minimal_set(g, 1) == metamour::metamour(g));
    }
  }
}

TEST_CASE("C7 walks") {
  TwoWalk w{2, {0, 1, 2, 3, 4}};
  CHECK(satisfies_two_walk_invariants(cycle(7), w));
  CHECK(two_walk_exists(cycle(7), 0, 4, 2));
  CHECK(d2_value(cycle(7), 0, 1) == std::optional<std::size_t>(3));
  FmRelation rel = FmRelation::compute(cycle(7));
  Graph dist3 = cycle_power_edges(7, 2);
  CHECK(rel.reach(2) == dist3);
  CHECK(fully_minimal_set(cycle(7), 2) == dist3);
  CHECK(fully_minimal_set(cycle(7), 2) == metamour_iterate(cycle(7), 2));
  CHECK_THROWS(two_walk_exists(cycle(7), 2, 2, 1));
}

TEST_CASE("K2 has no 2-walks") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK_FALSE(two_walk_exists(complete(2), 0, 1, k));
  CHECK_FALSE(d2_value(complete(2), 0, 1).has_value());
}

TEST_CASE("tree pair at tree distance 4 has d2 = 2") {
  Graph t = mary_tree(3, 2);
  // 3 and 5 are first cousins (depth 2, root path 0-1-3 and 0-2-5)
  CHECK(distance_matrix(t).at(3, 5) == Distance::finite(4));
  CHECK(d2_value(t, 3, 5) == std::optional<std::size_t>(2));
}

TEST_CASE("every edge of G(5,2) is in FM_2") {
  Graph g = generalized_petersen(5, 2);
  CHECK(is_subgraph_of(g, fully_minimal_set(g, 2)));
}

TEST_CASE("invariant checker rejects broken walks") {
  Graph c7 = cycle(7);
  CHECK_FALSE(satisfies_two_walk_invariants(c7, TwoWalk{2, {0, 1, 2, 1, 0}}));
  CHECK_FALSE(satisfies_two_walk_invariants(c7, TwoWalk{1, {0, 1, 0}}));
  CHECK_FALSE(satisfies_two_walk_invariants(complete(3), TwoWalk{1, {0, 1, 2}}));
  CHECK_FALSE(satisfies_two_walk_invariants(c7, TwoWalk{2, {0, 1, 2, 3}}));
}

TEST_CASE("recursion matches the brute-force enumerator on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_graph(3 + rng() % 6, 0.45, rng);
    FmRelation rel = FmRelation::compute(g, 3);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, rel.computed_levels()); ++k) {
      CHECK(rel.reach(k) == brute_force_reach(g, k));
    }
  }
}

TEST_CASE("enumerated walks satisfy the invariants and restrict correctly") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(5 + rng() % 4, 0.4, rng);
    FmRelation rel = FmRelation::compute(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      enumerate_two_walks(g, u, 3, [&](const TwoWalk& w) {
        CHECK(satisfies_two_walk_invariants(g, w));
        if (is_fully_minimal(rel, w)) {
          CHECK(rel.fully_minimal(3).adjacent(w.source(), w.target()));
          for (std::size_t i = 1; i < 3; ++i) {
            for (std::size_t j = 0; j < (std::size_t{1} << (3 - i - 1)); ++j) {
              TwoWalk sub = w.span(i + 1, j);
              CHECK(satisfies_two_walk_invariants(g, sub));
              CHECK(is_fully_minimal(rel, sub));
            }
          }
        }
        return true;
      });
    }
  }
}

TEST_CASE("FM_k is contained in M^k") {
  std::mt19937_64 rng(31);
  std::vector<Graph> graphs{cycle(7), cycle(9), c5hat(), generalized_petersen(7, 2),
                            mary_tree(3, 2)};
  for (int t = 0; t < 40; ++t) graphs.push_back(oracle::random_graph(4 + rng() % 9, 0.3, rng));
  for (const Graph& g : graphs) {
    FmRelation rel = FmRelation::compute(g);
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(is_subgraph_of(rel.fully_minimal(k), metamour_iterate(g, k)));
    }
  }
}

TEST_CASE("saturation folds levels into the detected cycle") {
  FmRelation rel = FmRelation::compute(cycle(9));
  REQUIRE(rel.saturated());
  FmRelation capped = FmRelation::compute(cycle(9), 40);
  for (std::size_t k = 1; k <= 40; ++k) {
    CHECK(rel.reach(k) == capped.reach(k));
    CHECK(rel.fully_minimal(k) == capped.fully_minimal(k));
  }
}

TEST_CASE("parity sets of G(5,2)") {
  Graph g = generalized_petersen(5, 2);
  FmParity p = fm_parity_sets(g, 12);
  CHECK(p.confirmed);
  CHECK(p.even == g);
  CHECK(p.odd == complement(g));
  CHECK(p.stabilized_by <= 2);
}

TEST_CASE("mk_edge_oracle agrees with iteration") {
  for (std::size_t k = 0; k <= 3; ++k) CHECK(mk_edge_oracle(cycle(7), k) == metamour_iterate(cycle(7), k));
  for (std::size_t k = 0; k <= 2; ++k) CHECK(mk_edge_oracle(c5hat(), k) == metamour_iterate(c5hat(), k));
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(3 + rng() % 8, 0.35, rng);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(mk_edge_oracle(g, k) == oracle::iterate_fw(g, k));
  }
  CHECK_THROWS_AS(mk_edge_oracle(cycle(7), 4), BudgetError);
  CHECK_THROWS_AS(mk_edge_oracle(cycle(13), 1), BudgetError);
}

TEST_CASE("persistence on G(6,2)") {
  Graph g = generalized_petersen(6, 2);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(is_subgraph_of(metamour_iterate(g, n), metamour_iterate(g, n + 2)));
  }
}

TEST_CASE("minimal length and full minimality are independent") {
  const auto candidates = remark_candidates();
  RemarkWitness w = find_remark_witnesses(candidates, 3);
  REQUIRE(w.minimal_not_fully_minimal.has_value());
  REQUIRE(w.fully_minimal_not_minimal.has_value());
  CHECK(w.minimal_not_fully_minimal->graph_name == "G(10,2)");
  MESSAGE("fully minimal, not minimal: " << w.fully_minimal_not_minimal->graph_name);
  {
    const WalkWitness& a = *w.minimal_not_fully_minimal;
    FmRelation rel = FmRelation::compute(a.graph);
    CHECK(satisfies_two_walk_invariants(a.graph, a.walk));
    CHECK(rel.d2(a.walk.source(), a.walk.target()) == std::optional<std::size_t>(a.walk.level));
    CHECK_FALSE(is_fully_minimal(rel, a.walk));
  }
  {
    const WalkWitness& b = *w.fully_minimal_not_minimal;
    FmRelation rel = FmRelation::compute(b.graph);
    CHECK(satisfies_two_walk_invariants(b.graph, b.walk));
    CHECK(*rel.d2(b.walk.source(), b.walk.target()) < b.walk.level);
    CHECK(is_fully_minimal(rel, b.walk));
  }
}

TEST_CASE("no fully minimal walk on G(m,2) is longer than minimal, m <= 16") {
  for (std::size_t m = 5; m <= 16; ++m) {
    Graph g = generalized_petersen(m, 2);
    FmRelation rel = FmRelation::compute(g);
    const std::size_t horizon = rel.cycle_start() + 2 * rel.cycle_length();
    for (std::size_t k = 1; k <= horizon; ++k) {
      for (const auto& [u, v] : rel.fully_minimal(k).edges()) CHECK(*rel.d2(u, v) == k);
    }
  }
}

TEST_CASE("C5 carries a fully minimal walk that is not minimal") {
  FmRelation rel = FmRelation::compute(cycle(5));
  CHECK(rel.fully_minimal(3).adjacent(0, 2));
  CHECK(rel.d2(0, 2) == std::optional<std::size_t>(1));
}
