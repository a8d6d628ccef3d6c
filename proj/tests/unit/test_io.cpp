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
#include "metamour/io.hpp"
#include "metamour/trees.hpp"
#include "oracles.hpp"

using namespace metamour;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("graph6 strings match a reference encoder") {
  // frozen from networkx.to_graph6_bytes
  CHECK(encode_graph6(complete(1)) == "@");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  CHECK(encode_graph6(generalized_petersen(5, 2)) == "IheA@GUAo");
  CHECK(encode_graph6(paley(13)) == "LlthgsL`mEkLkL");
  CHECK(encode_graph6(c5hat()) == "Ehf?");
  CHECK(encode_graph6(paley(13))[0] == 'L');
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> order(0, 20);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const Graph g = oracle::random_graph(order(rng), dens(rng), rng);
    REQUIRE(decode_graph6(encode_graph6(g)) == g);
  }
  const Graph big = oracle::random_graph(62, 0.5, rng);
  CHECK(decode_graph6(encode_graph6(big)) == big);
  CHECK(decode_graph6(">>graph6<<Dhc\n") == cycle(5));
}

TEST_CASE("graph6 rejects bad input") {
  CHECK_THROWS_AS(decode_graph6(""), FormatError);
  CHECK_THROWS_AS(decode_graph6("Dh"), FormatError);      // truncated
  CHECK_THROWS_AS(decode_graph6("Dhcc"), FormatError);    // trailing
  CHECK_THROWS_AS(decode_graph6("D h"), FormatError);     // bad byte
  CHECK_THROWS_AS(decode_graph6("~?@A"), FormatError);    // long form
  CHECK_THROWS_AS(encode_graph6(Graph(63)), FormatError);
}

TEST_CASE("dot export") {
  const std::string e2 = export_dot(edgeless(2));
  CHECK(count(e2, "--") == 0);
  CHECK(count(e2, ";\n") == 2);
  const std::string ch = export_dot(c5hat());
  CHECK(count(ch, "--") == 7);
  CHECK(count(ch, ";\n") == 13);
  const PetersenSpec p = PetersenSpec::make(5, 2);
  const std::vector<std::string> labels = p.labels();
  const std::string pd = export_dot(generalized_petersen(p), &labels);
  CHECK(count(pd, "--") == 15);
  for (int i = 0; i < 5; ++i) {
    CHECK(count(pd, "label=\"v" + std::to_string(i) + "\"") == 1);
    CHECK(count(pd, "label=\"u" + std::to_string(i) + "\"") == 1);
  }
  CHECK_THROWS_AS(export_dot(cycle(4), &labels), FormatError);
}

TEST_CASE("edge lists") {
  const Graph g = generalized_petersen(7, 3);
  CHECK(parse_edgelist(export_edgelist(g)) == g);
  CHECK(parse_edgelist("n 3\n0 1\n1 0\n") == Graph::from_edges(3, {{0, 1}}));
  CHECK_THROWS_AS(parse_edgelist("n 3\n0 3\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("n 3\n1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("3\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("n 3\n0\n"), FormatError);
}

TEST_CASE("graph spec language") {
  CHECK(parse_graph_spec("cycle:7").graph == cycle(7));
  CHECK(parse_graph_spec("path:4").graph == path(4));
  CHECK(parse_graph_spec("complete:5").graph == complete(5));
  CHECK(parse_graph_spec("edgeless:3").graph == edgeless(3));
  CHECK(parse_graph_spec("c5hat").graph == c5hat());
  CHECK(parse_graph_spec("paley:13").graph == paley(13));
  const ParsedGraph p = parse_graph_spec("petersen:5,2");
  CHECK(p.graph == generalized_petersen(5, 2));
  CHECK(p.labels.front() == "v0");
  const ParsedGraph t = parse_graph_spec(" tree:3,2 ");
  CHECK(t.graph == mary_tree(3, 2));
  CHECK(t.labels[1] == "r.0");
  CHECK(parse_graph_spec("g6:Dhc").graph == cycle(5));

  const Graph blocks[] = {complete(2), edgeless(1), cycle(3), edgeless(1), edgeless(2)};
  CHECK(parse_graph_spec("joinalong:cycle:5;complete:2,edgeless:1,cycle:3,edgeless:1,edgeless:2").graph ==
        join_along(cycle(5), blocks));
  const Graph pb[] = {generalized_petersen(5, 2), complete(1), complete(1), complete(1), complete(1)};
  CHECK(parse_graph_spec("joinalong:cycle:5;petersen:5,2,complete:1,complete:1,complete:1,complete:1")
            .graph == join_along(cycle(5), pb));
}

TEST_CASE("graph spec errors") {
  for (const char* bad : {"", "cycle", "cycle:2", "cycle:x", "cycle:5x", "petersen:5", "petersen:6,3",
                          "tree:0,2", "paley:7", "paley:25", "c5hat:1", "wheel:5", "g6:D",
                          "joinalong:cycle:5", "joinalong:cycle:5;complete:1"}) {
    CHECK_THROWS_AS_MESSAGE(parse_graph_spec(bad), FormatError, bad);
  }
}
