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

// Theorem checkers. Each returns a TheoremReport whose verdict is kFail
// exactly when it lists counterexamples; every counterexample carries the
// graph in graph6 so it can be replayed on its own.

#ifndef METAMOUR_VERIFY_HPP_
#define METAMOUR_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "metamour/graph.hpp"

namespace metamour {

enum class Verdict { kPass, kFail, kNotApplicable };

std::string to_string(Verdict v);

struct Counterexample {
  std::string graph6;
  std::string witness;
};

struct TheoremReport {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::kPass;
  std::vector<Counterexample> counterexamples;
  nlohmann::json data = nlohmann::json::object();
  std::size_t graphs_scanned = 0;
  double runtime_ms = 0.0;

  // Records a failure and flips the verdict.
  void fail(const Graph& g, std::string witness);
  // kPass unless failures were recorded; kNotApplicable is kept.
  nlohmann::json to_json() const;
};

// --- single graphs -------------------------------------------------------

// (a) M(G) = co-G iff diam(G) <= 2; (b) the metamour-preimage conditions:
// (2) M(co-G) = G, (3) every edge xy has a z adjacent to neither, (4)
// diam(co-G) <= 2, agree; (c) 2 max degree < |V| implies M(co-G) = G;
// (d) metamour-complementary with period 2 iff diam(G) = diam(co-G) = 2.
// For n <= 5, condition (1), some G' with M(G') = G, is found by brute force
// over the subgraphs of co-G and compared with (2).
TheoremReport check_diameter_equivalences(const Graph& g);

// Not applicable unless G is connected with metamour period 2.
TheoremReport check_period2_structure(const Graph& g);

// True when M^k(G) = G and no proper divisor of k works.
bool has_exact_period(const Graph& g, std::size_t k);

// --- enumeration-backed suites (jobs = 0 uses every core) ----------------

TheoremReport diameter_suite(std::size_t n_max, std::size_t jobs = 0);
// M(G) = G exactly for edgeless G, all graphs on <= n_max vertices.
TheoremReport period1_suite(std::size_t n_max, std::size_t jobs = 0);
TheoremReport period2_suite(std::size_t n_max, std::size_t jobs = 0);

// Isomorphism classes on <= n_max vertices with period exactly k,
// connected only unless asked otherwise.
std::vector<Graph> search_exact_period(std::size_t n_max, std::size_t k,
                                       bool include_disconnected = false,
                                       std::size_t jobs = 0);

// Exhaustive period-3 search compared with {C7, C9}, plus `samples` random
// connected graphs on 10..12 vertices. With disconnected graphs included,
// unions whose components are C7, C9 or K1 are listed under data.flagged
// rather than failed.
TheoremReport period3_suite(std::size_t n_max, bool include_disconnected = false,
                            std::size_t samples = 10000, std::size_t jobs = 0,
                            std::uint64_t seed = 1);

// --- families -------------------------------------------------------------

// mu against the published values; M^k(C_n) against the closed form.
TheoremReport cycle_suite(std::size_t n_lo = 5, std::size_t n_hi = 33);
// Paley graphs: metamour-complementary, self-complementary, period 2.
TheoremReport paley_suite(const std::vector<std::uint64_t>& qs);
// Random inputs on 1..max_order vertices through the three embeddings.
TheoremReport embedding_suite(std::size_t samples = 20, std::size_t max_order = 6,
                              std::uint64_t seed = 1);

TheoremReport petersen_suite(std::size_t m);
TheoremReport connectivity_check(std::size_t m, std::size_t j);

// Blocks along C_n: period law, shift/flip isomorphism (n >= 7), period-2
// closure along C5 and C5-hat, and the join identity for M.
TheoremReport join_along_suite(std::size_t n, const std::vector<Graph>& blocks,
                               std::uint64_t seed = 1);

TheoremReport tree_suite(std::size_t h, std::size_t m);

// Walk-based rebuilds of M^k against iteration, and the 2-walk recursion
// against brute force on every graph with <= n_max vertices.
TheoremReport oracle_suite(std::size_t n_max = 8, std::size_t max_level = 3,
                           std::size_t jobs = 0);

// --- registry ---------------------------------------------------------------

struct SuiteOptions {
  std::size_t max_n = 0;  // 0 = suite default
  std::size_t jobs = 0;
  bool include_disconnected = false;
  std::size_t samples = 0;  // 0 = suite default
  std::uint64_t seed = 1;
  std::size_t m = 0, j = 0, h = 0, n = 0, q = 0;
  std::vector<Graph> blocks;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name or bad parameters.
TheoremReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace metamour

#endif  // METAMOUR_VERIFY_HPP_
