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

#include "doctest.h"
#include "metamour/canonical.hpp"
#include "metamour/constructions.hpp"
#include "metamour/dynamics.hpp"
#include "metamour/trees.hpp"

using namespace metamour;

TEST_CASE("coordinates round-trip") {
  TreeShape t(4, 3);
  for (Vertex x = 0; x < t.order(); ++x) {
    CHECK(t.vertex(t.coord(x)) == x);
    CHECK(t.coord(x).depth() == t.depth(x));
  }
  CHECK(t.coord(0).to_string() == "r");
  CHECK(t.coord(5).to_string() == "r.0.1");
  CHECK_THROWS(t.vertex(TreeCoord{{3}}));
  CHECK_THROWS(t.vertex(TreeCoord{{0, 0, 0, 0, 0}}));
  Graph g = mary_tree(4, 3);
  DistanceMatrix d = distance_matrix(g);
  for (Vertex x = 0; x < t.order(); ++x) {
    for (Vertex y = 0; y < t.order(); ++y) CHECK(d.at(x, y) == Distance::finite(t.distance(x, y)));
  }
}

TEST_CASE("path profiles") {
  CHECK(path_profile(3, 2, {{0, 1}}, {{0, 0}}) == PathProfile{1, 1});
  CHECK(path_profile(3, 2, {{0, 1}}, {{1, 0}}) == PathProfile{2, 2});
  CHECK(path_profile(4, 2, {{1, 0, 1, 1}}, {{1}}) == PathProfile{3, 0});
  CHECK_THROWS(path_profile(3, 2, {{2}}, {{0}}));
}

TEST_CASE("segment index") {
  CHECK(segment_index(1).i == 0);
  CHECK(segment_index(2).i == 1);
  CHECK(segment_index(3).i == 2);
  CHECK(segment_index(4).i == 2);
  for (std::uint64_t s = 5; s <= 8; ++s) CHECK(segment_index(s).i == 3);
  CHECK_THROWS(segment_index(0));
  for (std::uint64_t s = 1; s <= 2000; ++s) CHECK(SegmentIndex{segment_index(s).i}.contains(s));
}

TEST_CASE("sum properties of segments") {
  for (std::size_t i = 1; i <= 10; ++i) {
    if (i != 2) CHECK(segment_sum_property(i));
  }
  for (std::size_t l = 1; l <= 10; ++l) CHECK(segment_union_sum_property(l));
}

TEST_CASE("M^2 of tall trees") {
  for (auto [h, m] : {std::pair<std::size_t, std::size_t>{5, 2}, {5, 3}, {6, 2}}) {
    TreeM2Report r = tree_m2_report(h, m);
    CHECK(r.m2 == r.closed_form);
    CHECK(r.components.size() == 2);
    CHECK(r.parity_split);
    CHECK(r.max_diameter == (h + 1) / 2);
  }
  CHECK_THROWS(tree_m2_report(4, 2));
}

TEST_CASE("exceptional pair never appears") {
  for (std::size_t h : {5u, 6u}) {
    Graph t = mary_tree(h, 2);
    for (std::size_t k = 2; k <= 8; ++k) {
      CHECK_FALSE(tree_mk_edge(h, 2, 1, 2, k));
      CHECK_FALSE(metamour_iterate(t, k).adjacent(1, 2));
    }
  }
  CHECK_FALSE(is_exceptional_pair(7, 2, 1, 2));
  CHECK_FALSE(is_exceptional_pair(5, 3, 1, 2));
}

TEST_CASE("closed form equals iteration") {
  for (auto [h, m] : {std::pair<std::size_t, std::size_t>{5, 2}, {5, 3}, {6, 2}}) {
    TreeMkPredicate pred(h, m);
    Graph it = metamour_iterate(mary_tree(h, m), 2);
    for (std::size_t k = 2; k <= 7; ++k) {
      CHECK(pred.graph(k) == it);
      it = metamour::metamour(it);
    }
  }
  CHECK_THROWS(tree_mk_edge(5, 2, 1, 3, 1));
}

TEST_CASE("limit profile") {
  CHECK(tree_limit_profile(5, 2).start == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  for (auto [h, m] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 2}}) {
    TreeLimitProfile p = tree_limit_profile(h, m);
    OrbitReport r = orbit(mary_tree(h, m));
    CHECK(r.period == 2);
    CHECK(r.preperiod == p.start);
    CHECK(r.at(p.start + (p.start % 2)) == p.even_limit);
    CHECK(r.at(p.start + 1 - (p.start % 2)) == p.odd_limit);
  }
}

TEST_CASE("small trees") {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t h = 1; h <= 4; ++h) {
      Graph it = mary_tree(h, m);
      for (std::size_t k = 0; k <= 8; ++k) {
        auto e = small_tree_expected(h, m, k);
        // The stated formula misses for T(3,2) at k = 5 (M^4 is already
        // edgeless) and for the T(4,m) limit graphs, where the h >= 5 parity
        // criterion predicts extra edges. Those misses are frozen here.
        const bool known_miss = (h == 3 && m == 2 && k == 5) || (h == 4 && k >= small_tree_onset(4, m));
        if (e) CHECK_MESSAGE((e->graph == it) != known_miss, "h=" << h << " m=" << m << " k=" << k);
        it = metamour::metamour(it);
      }
    }
  }
  // shapes up to isomorphism
  auto m1 = small_tree_expected(2, 3, 1);
  REQUIRE(m1);
  Graph wd = join(complete(1), disjoint_union(disjoint_union(complete(3), complete(3)), complete(3)));
  CHECK(is_isomorphic(m1->graph, disjoint_union(complete(3), wd)));
  auto m2 = small_tree_expected(2, 3, 2);
  REQUIRE(m2);
  CHECK(is_isomorphic(m2->graph, disjoint_union(join_power(edgeless(3), 3), edgeless(4))));
  auto m3 = small_tree_expected(2, 3, 3);
  REQUIRE(m3);
  CHECK(is_isomorphic(m3->graph, disjoint_union(disjoint_union(disjoint_union(complete(3), complete(3)),
                                                               complete(3)),
                                                edgeless(4))));
  CHECK(small_tree_expected(1, 3, 2)->graph == edgeless(4));
  CHECK(small_tree_expected(2, 3, 5)->graph == edgeless(13));
  CHECK_FALSE(small_tree_expected(3, 2, 3).has_value());
  CHECK_THROWS(small_tree_expected(5, 2, 1));
}

TEST_CASE("T(4,m) limit graphs are subgraphs of the parity prediction") {
  for (std::size_t m = 2; m <= 4; ++m) {
    OrbitReport r = orbit(mary_tree(4, m));
    for (std::size_t k = r.preperiod; k < r.preperiod + 2; ++k) {
      const Graph predicted = small_tree_expected(4, m, k)->graph;
      const Graph actual = r.at(k);
      CHECK(is_subgraph_of(actual, predicted));
      CHECK(actual.size() < predicted.size());
      if (m == 2 && k % 2 == 0) CHECK(predicted.size() - actual.size() == 16);
    }
  }
}

TEST_CASE("small tree onsets") {
  for (std::size_t m = 2; m <= 4; ++m) {
    OrbitReport r = orbit(mary_tree(4, m));
    CHECK(r.period == 2);
    CHECK(r.preperiod == small_tree_onset(4, m));
    OrbitReport r3 = orbit(mary_tree(3, m));
    CHECK(r3.period == 1);
    CHECK(r3.preperiod == (m == 2 ? 4 : 6));
  }
}
