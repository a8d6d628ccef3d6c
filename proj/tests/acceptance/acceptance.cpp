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

// Acceptance run: one PASS/FAIL line per criterion, failing witnesses
// indented underneath. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "metamour/constructions.hpp"
#include "metamour/dynamics.hpp"
#include "metamour/graph.hpp"
#include "metamour/verify.hpp"

using namespace metamour;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  // Folds a suite report in; its counterexamples become notes.
  void absorb(const TheoremReport& r) {
    if (r.verdict == Verdict::kFail) {
      ok = false;
      for (const Counterexample& c : r.counterexamples) {
        notes.push_back(r.theorem + ": " + c.witness + (c.graph6.empty() ? "" : " [" + c.graph6 + "]"));
      }
      if (r.counterexamples.empty()) notes.push_back(r.theorem + ": failed");
    }
  }
};

// Independent of dynamics::mu: direct search over 2^k mod n.
std::size_t mu_direct(std::size_t n) {
  std::size_t p = 2 % n;
  for (std::size_t k = 1;; ++k) {
    if (p == 1 || p == n - 1) return k;
    p = (p * 2) % n;
  }
}

std::string sizes(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

}  // namespace

namespace criteria {

Outcome period3() {
  Outcome o;
  const TheoremReport r = period3_suite(9);
  o.absorb(r);
  std::set<std::string> found;
  for (const auto& f : r.data["found"]) found.insert(f["name"].get<std::string>());
  o.require(found == std::set<std::string>{"C7", "C9"}, "found set is not {C7, C9}");
  o.require(r.data["flagged"].empty(), "flagged unions among connected graphs");
  // connected graphs on 1..9 vertices
  o.require(r.params["max_n"] == 9, "scan did not reach 9 vertices");
  o.require(has_exact_period(cycle(7), 3) && has_exact_period(cycle(9), 3),
            "C7 or C9 lacks period 3");
  o.detail = "found " + std::to_string(found.size()) + " classes, " +
             std::to_string(r.graphs_scanned) + " graphs";
  return o;
}

Outcome period1() {
  Outcome o;
  const TheoremReport r = period1_suite(7);
  o.absorb(r);
  o.require(r.graphs_scanned == 1 + 2 + 4 + 11 + 34 + 156 + 1044, "wrong number of graphs scanned");
  o.require(r.data["fixed_points"] == 7, "fixed points are not exactly the 7 edgeless graphs");
  o.detail = std::to_string(r.graphs_scanned) + " graphs, " + r.data["fixed_points"].dump() +
             " fixed points";
  return o;
}

Outcome period2() {
  Outcome o;
  const TheoremReport r = period2_suite(8);
  o.absorb(r);
  o.require(r.graphs_scanned == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117,
            "wrong number of connected graphs scanned");
  const std::size_t total = r.data["period2_graphs"];
  const std::size_t d2 = r.data["diameter2"], d3 = r.data["diameter3"];
  o.require(total > 0 && d2 + d3 == total, "diameter dichotomy counts do not add up");
  o.detail = std::to_string(total) + " period-2 graphs (" + std::to_string(d2) + " diam 2, " +
             std::to_string(d3) + " diam 3)";
  return o;
}

Outcome cycles() {
  Outcome o;
  const TheoremReport r = cycle_suite(5, 33);
  o.absorb(r);
  o.require(r.data["mu_values_checked"] == 44, "not all 44 mu values checked");
  for (std::size_t n = 5; n <= 33; n += 2) {
    const auto p = metamour_period(cycle(n));
    o.require(p && *p == mu_direct(n), "period of C" + std::to_string(n) + " differs from mu");
    o.require(mu(n) == mu_direct(n), "mu(" + std::to_string(n) + ") differs from direct search");
  }
  o.detail = "44 mu values, odd n in [5,33]";
  return o;
}

Outcome dreamcatcher() {
  Outcome o;
  const TheoremReport r = run_suite("dreamcatcher", SuiteOptions{});
  o.absorb(r);
  const std::vector<Graph> blocks(7, edgeless(2));
  const std::vector<Graph> co(7, complete(2));
  const Graph g = join_along(cycle(7), blocks);
  const Graph g0 = join_along(cycle(7), co);
  o.require(g.order() == 14 && g.size() == 7 * 4, "dream catcher has the wrong shape");
  Graph it = g;
  for (std::size_t k = 0; k <= 24; ++k) {
    o.require((it == g) == (k % 6 == 0), "M^" + std::to_string(k) + " = G disagrees");
    o.require((it == g0) == (k % 3 == 0 && k % 2 == 1), "M^" + std::to_string(k) + " = G0 disagrees");
    it = metamour::metamour(it);
  }
  const auto pp = pseudo_metamour_period(g);
  o.require(pp && *pp == 2, "pseudo-period is not 2");
  o.require(metamour_period(g) == 6u, "period is not 6");
  o.detail = "period 6, pseudo-period 2, G0 at k = 3, 9, 15, 21";
  return o;
}

Outcome embeddings() {
  Outcome o;
  const TheoremReport r = embedding_suite(20, 6);
  o.absorb(r);
  o.require(r.data["inputs"] == 20, "fewer than 20 random inputs");
  o.detail = r.data["embeddings_checked"].dump() + " embeddings from 20 inputs";
  return o;
}

Outcome paley_graphs() {
  Outcome o;
  o.absorb(paley_suite({5, 13, 17, 29}));
  for (std::uint64_t q : {5, 13, 17, 29}) {
    const Graph p = paley(q);
    o.require(metamour::metamour(p) == complement(p), "QR(" + std::to_string(q) + ") not metamour-complementary");
    o.require(metamour_period(p) == 2u, "QR(" + std::to_string(q) + ") period is not 2");
  }
  o.detail = "q = 5, 13, 17, 29";
  return o;
}

Outcome petersen() {
  Outcome o;
  const TheoremReport p = run_suite("petersen", SuiteOptions{});
  const TheoremReport c = run_suite("connectivity", SuiteOptions{});
  o.absorb(p);
  o.absorb(c);
  std::vector<std::size_t> periods;
  for (std::size_t m = 5; m <= 12; ++m) {
    const OrbitReport r = orbit(generalized_petersen(m, 2));
    o.require(r.period == 2, "G(" + std::to_string(m) + ",2) limit period is not 2");
    periods.push_back(r.period);
  }
  o.detail = "m = 5..12, limit periods " + sizes(periods) + ", " +
             std::to_string(c.graphs_scanned) + " connectivity cases";
  return o;
}

Outcome trees() {
  Outcome o;
  const TheoremReport r = run_suite("trees", SuiteOptions{});
  o.absorb(r);
  o.detail = std::to_string(r.counterexamples.size()) + " counterexamples over " +
             std::to_string(r.data["parts"].size()) + " trees";
  return o;
}

Outcome diameter() {
  Outcome o;
  const TheoremReport r = diameter_suite(6);
  o.absorb(r);
  o.require(r.graphs_scanned == 1 + 2 + 4 + 11 + 34 + 156, "wrong number of graphs scanned");
  o.require(r.params["preimage_brute_force_max_n"] == 5, "preimage brute force not up to n = 5");
  o.detail = std::to_string(r.graphs_scanned) + " graphs, " + r.data["metamour_graphs"].dump() +
             " metamour graphs";
  return o;
}

Outcome oracles() {
  Outcome o;
  const TheoremReport r = oracle_suite(8, 3);
  o.absorb(r);
  o.detail = std::to_string(r.graphs_scanned) + " graphs";
  return o;
}

}  // namespace criteria

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "period-3 classification, connected n <= 9", criteria::period3},
      {2, "period 1 only for edgeless graphs, n <= 7", criteria::period1},
      {3, "period-2 structure, connected n <= 8", criteria::period2},
      {4, "mu values and odd cycles", criteria::cycles},
      {5, "decorated C7 dream catcher", criteria::dreamcatcher},
      {6, "embedding constructions", criteria::embeddings},
      {7, "Paley graphs", criteria::paley_graphs},
      {8, "generalized Petersen G(m,2)", criteria::petersen},
      {9, "complete m-ary trees", criteria::trees},
      {10, "inverse-image equivalences", criteria::diameter},
      {11, "walk oracle coherence", criteria::oracles},
  };

  int failed = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%s; %.1f s)\n", c.id, out.ok ? "PASS" : "FAIL", c.title,
                out.detail.c_str(), s);
    for (const std::string& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", all.size(), failed);
  return failed == 0 ? 0 : 1;
}
