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

#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "metamour/metamour.h"

namespace metamour_cli {

namespace {

using nlohmann::json;

// Library failure carried up to run(); parse and argument problems are the
// caller's fault and map to the usage exit code.
struct ApiError : std::runtime_error {
  mm_status status;
  ApiError(mm_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(mm_status s, const char* call) {
  if (s != MM_OK) {
    throw ApiError(s, std::string(call) + ": " + mm_status_name(s) + ": " + mm_last_error());
  }
}

struct GraphDeleter {
  void operator()(mm_graph* g) const { mm_graph_free(g); }
};
using GraphPtr = std::unique_ptr<mm_graph, GraphDeleter>;

GraphPtr parse_graph(const std::string& spec) {
  mm_graph* g = nullptr;
  check(mm_graph_parse(spec.c_str(), &g), "parse graph");
  return GraphPtr(g);
}

std::string take(char* s) {
  std::string out = s;
  mm_string_free(s);
  return out;
}

std::size_t max_iters_from_env() {
  const char* v = std::getenv("METAMOUR_MAX_ITERS");
  if (!v || !*v) return 0;
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(v).size() || n == 0 || v[0] == '-') {
    throw CLI::ValidationError("METAMOUR_MAX_ITERS", "expected a positive integer, got '" +
                                                         std::string(v) + "'");
  }
  return static_cast<std::size_t>(n);
}

struct Options {
  std::string format;  // empty: json, except raw text for construct
  std::string graph;
  std::string export_format;
  bool labels = false;
  std::size_t iterate = 0;
  std::string suite;
  std::string spec;
  std::size_t max_n = 0;
  std::size_t jobs = 0;
  bool include_disconnected = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t m = 0, j = 0, h = 0, n = 0, q = 0;
  std::vector<std::string> blocks;
};

json make_report(const std::string& command, json params, const std::string& verdict,
                 json counterexamples, json data, double runtime_ms, std::size_t scanned) {
  return {{"command", command},
          {"params", std::move(params)},
          {"verdict", verdict},
          {"counterexamples", std::move(counterexamples)},
          {"data", std::move(data)},
          {"meta", {{"runtime_ms", runtime_ms}, {"graphs_scanned", scanned}}}};
}

void print_text(const json& r, std::ostream& out) {
  out << r["command"].get<std::string>() << ": " << r["verdict"].get<std::string>() << "\n";
  for (const auto& [k, v] : r["params"].items()) out << "  " << k << " = " << v.dump() << "\n";
  for (const auto& c : r["counterexamples"]) {
    out << "  counterexample " << c["graph6"].get<std::string>() << ": "
        << c["witness"].get<std::string>() << "\n";
  }
  for (const auto& [k, v] : r["data"].items()) out << "  " << k << ": " << v.dump() << "\n";
}

void emit(const json& r, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    print_text(r, out);
  } else {
    out << r.dump(2) << "\n";
  }
}

int exit_for(const std::string& verdict) {
  return verdict == "fail" ? kExitTheoremFailure : kExitPass;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  GraphPtr g = parse_graph(o.graph);
  char* s = nullptr;
  check(mm_orbit_json(g.get(), max_iters_from_env(), &s), "orbit");
  json data = json::parse(take(s));
  emit(make_report("orbit", {{"graph", o.graph}}, "pass", json::array(), std::move(data), 0.0, 1),
       o, out);
  return kExitPass;
}

int cmd_construct(const Options& o, std::ostream& out) {
  GraphPtr g = parse_graph(o.spec);
  if (o.iterate > 0) {
    mm_graph* it = nullptr;
    check(mm_iterate(g.get(), o.iterate, &it), "iterate");
    g.reset(it);
  }
  const std::string fmt = o.export_format.empty() ? "graph6" : o.export_format;
  char* s = nullptr;
  if (fmt == "graph6") {
    check(mm_to_graph6(g.get(), &s), "graph6");
  } else if (fmt == "dot") {
    check(mm_to_dot(g.get(), o.labels ? 1 : 0, &s), "dot");
  } else {
    check(mm_to_edgelist(g.get(), &s), "edgelist");
  }
  std::string text = take(s);
  if (o.format == "json") {
    json params = {{"spec", o.spec}, {"export", fmt}, {"iterate", o.iterate}};
    json data = {{"order", mm_graph_order(g.get())},
                 {"size", mm_graph_size(g.get())},
                 {"text", text}};
    out << make_report("construct", params, "pass", json::array(), data, 0.0, 1).dump(2) << "\n";
  } else {
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string raw;
  json params;
  if (!o.graph.empty()) {
    GraphPtr g = parse_graph(o.graph);
    char* s = nullptr;
    check(mm_check_graph(o.suite.c_str(), g.get(), &s), "check");
    raw = take(s);
    params = {{"graph", o.graph}};
  } else {
    json opts = json::object();
    if (o.max_n) opts["max_n"] = o.max_n;
    if (o.jobs) opts["jobs"] = o.jobs;
    if (o.include_disconnected) opts["include_disconnected"] = true;
    if (o.samples) opts["samples"] = o.samples;
    opts["seed"] = o.seed;
    if (o.m) opts["m"] = o.m;
    if (o.j) opts["j"] = o.j;
    if (o.h) opts["h"] = o.h;
    if (o.n) opts["n"] = o.n;
    if (o.q) opts["q"] = o.q;
    if (!o.blocks.empty()) opts["blocks"] = o.blocks;
    char* s = nullptr;
    check(mm_run_suite(o.suite.c_str(), opts.dump().c_str(), &s), "verify");
    raw = take(s);
  }
  json r = json::parse(raw);
  params.update(r["params"]);
  params["suite"] = o.suite;
  params["theorem"] = r["theorem"];
  const std::string verdict = r["verdict"].get<std::string>();
  emit(make_report("verify", params, verdict, r["counterexamples"], r["data"],
                   r["runtime_ms"].get<double>(), r["graphs_scanned"].get<std::size_t>()),
       o, out);
  return exit_for(verdict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metamour graph dynamics: orbits, constructions and theorem checks", "metamour"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mm_version()));

  Options o;
  const std::vector<std::string> formats{"json", "text"};

  CLI::App* orbit = app.add_subcommand("orbit", "Iterate the metamour operator to a cycle");
  orbit->add_option("--graph", o.graph, "Graph spec, e.g. cycle:12 or g6:Dhc")->required();
  orbit->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));

  CLI::App* construct = app.add_subcommand("construct", "Build a graph and export it");
  construct->add_option("spec", o.spec, "Graph spec")->required();
  construct->add_option("--export", o.export_format, "graph6 (default), dot or edgelist")
      ->check(CLI::IsMember({"graph6", "dot", "edgelist"}));
  construct->add_flag("--labels", o.labels, "Family vertex labels in DOT output");
  construct->add_option("--iterate", o.iterate, "Export M^k instead of the graph");
  construct->add_option("--format", o.format, "text prints the export, json wraps it")
      ->check(CLI::IsMember(formats));

  CLI::App* verify = app.add_subcommand("verify", "Run a theorem suite");
  verify->set_help_flag("--help", "Print this help message and exit");
  std::string names = mm_suite_names();
  std::vector<std::string> suites;
  for (std::istringstream in(names); in >> names;) suites.push_back(names);
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--graph", o.graph, "Check one graph (diameter, period2)");
  verify->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));
  verify->add_option("--max-n", o.max_n, "Largest order to enumerate");
  verify->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--include-disconnected", o.include_disconnected,
                   "Enumerate disconnected graphs too");
  verify->add_option("--samples", o.samples, "Random samples");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--m", o.m, "Family parameter m");
  verify->add_option("--j", o.j, "Petersen step j");
  verify->add_option("--h", o.h, "Tree height");
  verify->add_option("--n", o.n, "Base cycle length");
  verify->add_option("--q", o.q, "Paley order");
  verify->add_option("--block", o.blocks, "Block spec for joinalong (repeatable)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << mm_version() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    return cmd_verify(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.status == MM_ERR_PARSE || e.status == MM_ERR_INVALID_ARGUMENT ||
                       e.status == MM_ERR_SIZE_LIMIT || e.status == MM_ERR_UNSUPPORTED;
    return usage ? kExitUsage : kExitTheoremFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace metamour_cli
