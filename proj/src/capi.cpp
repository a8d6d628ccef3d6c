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

#include "metamour/metamour.h"

#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "metamour/canonical.hpp"
#include "metamour/constructions.hpp"
#include "metamour/dynamics.hpp"
#include "metamour/enumerate.hpp"
#include "metamour/io.hpp"
#include "metamour/verify.hpp"
#include "metamour/walks.hpp"

struct mm_graph {
  metamour::Graph graph;
  std::vector<std::string> labels;
};

namespace {

thread_local std::string g_last_error;

mm_status set_error(mm_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps exceptions to status codes; most specific types first.
template <typename F>
mm_status guarded(F&& f) {
  using namespace metamour;
  try {
    g_last_error.clear();
    f();
    return MM_OK;
  } catch (const FormatError& e) {
    return set_error(MM_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(MM_ERR_PARSE, e.what());
  } catch (const UnsupportedError& e) {
    return set_error(MM_ERR_UNSUPPORTED, e.what());
  } catch (const EnumerationError& e) {
    return set_error(MM_ERR_SIZE_LIMIT, e.what());
  } catch (const SizeLimitError& e) {
    return set_error(MM_ERR_SIZE_LIMIT, e.what());
  } catch (const BudgetError& e) {
    return set_error(MM_ERR_SIZE_LIMIT, e.what());
  } catch (const OrbitBoundError& e) {
    return set_error(MM_ERR_ORBIT_BOUND, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(MM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

mm_graph* wrap(metamour::Graph g, std::vector<std::string> labels = {}) {
  return new mm_graph{std::move(g), std::move(labels)};
}

std::size_t get_size(const nlohmann::json& j, const char* key, std::size_t fallback) {
  return j.contains(key) ? j.at(key).get<std::size_t>() : fallback;
}

}  // namespace

extern "C" {

const char* mm_version(void) { return "1.0.0"; }

const char* mm_status_name(mm_status status) {
  switch (status) {
    case MM_OK: return "ok";
    case MM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MM_ERR_PARSE: return "parse-error";
    case MM_ERR_SIZE_LIMIT: return "size-limit";
    case MM_ERR_UNSUPPORTED: return "unsupported";
    case MM_ERR_ORBIT_BOUND: return "orbit-bound";
    case MM_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* mm_last_error(void) { return g_last_error.c_str(); }

mm_status mm_graph_create(size_t n, const size_t* edges, size_t edge_count, mm_graph** out) {
  return guarded([&] {
    require(out != nullptr, "mm_graph_create: out is null");
    require(edges != nullptr || edge_count == 0, "mm_graph_create: edges is null");
    std::vector<metamour::Edge> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = wrap(metamour::Graph::from_edges(n, list));
  });
}

mm_status mm_graph_parse(const char* spec, mm_graph** out) {
  return guarded([&] {
    require(spec && out, "mm_graph_parse: null argument");
    metamour::ParsedGraph p = metamour::parse_graph_spec(spec);
    *out = wrap(std::move(p.graph), std::move(p.labels));
  });
}

mm_status mm_graph_from_graph6(const char* text, mm_graph** out) {
  return guarded([&] {
    require(text && out, "mm_graph_from_graph6: null argument");
    *out = wrap(metamour::decode_graph6(text));
  });
}

mm_status mm_graph_clone(const mm_graph* g, mm_graph** out) {
  return guarded([&] {
    require(g && out, "mm_graph_clone: null argument");
    *out = new mm_graph(*g);
  });
}

void mm_graph_free(mm_graph* g) { delete g; }

size_t mm_graph_order(const mm_graph* g) { return g ? g->graph.order() : 0; }
size_t mm_graph_size(const mm_graph* g) { return g ? g->graph.size() : 0; }

mm_status mm_graph_adjacent(const mm_graph* g, size_t x, size_t y, int* out) {
  return guarded([&] {
    require(g && out, "mm_graph_adjacent: null argument");
    require(x < g->graph.order() && y < g->graph.order(), "mm_graph_adjacent: vertex out of range");
    *out = g->graph.adjacent(x, y) ? 1 : 0;
  });
}

mm_status mm_graph_equal(const mm_graph* a, const mm_graph* b, int* out) {
  return guarded([&] {
    require(a && b && out, "mm_graph_equal: null argument");
    *out = a->graph == b->graph ? 1 : 0;
  });
}

mm_status mm_graph_isomorphic(const mm_graph* a, const mm_graph* b, int* out) {
  return guarded([&] {
    require(a && b && out, "mm_graph_isomorphic: null argument");
    *out = metamour::is_isomorphic(a->graph, b->graph) ? 1 : 0;
  });
}

mm_status mm_metamour(const mm_graph* g, mm_graph** out) {
  return guarded([&] {
    require(g && out, "mm_metamour: null argument");
    *out = wrap(metamour::metamour(g->graph), g->labels);
  });
}

mm_status mm_iterate(const mm_graph* g, size_t k, mm_graph** out) {
  return guarded([&] {
    require(g && out, "mm_iterate: null argument");
    *out = wrap(metamour::metamour_iterate(g->graph, k), g->labels);
  });
}

mm_status mm_to_graph6(const mm_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "mm_to_graph6: null argument");
    *out = dup_string(metamour::encode_graph6(g->graph));
  });
}

mm_status mm_to_dot(const mm_graph* g, int with_labels, char** out) {
  return guarded([&] {
    require(g && out, "mm_to_dot: null argument");
    const bool use = with_labels && !g->labels.empty();
    *out = dup_string(metamour::export_dot(g->graph, use ? &g->labels : nullptr));
  });
}

mm_status mm_to_edgelist(const mm_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "mm_to_edgelist: null argument");
    *out = dup_string(metamour::export_edgelist(g->graph));
  });
}

mm_status mm_orbit_json(const mm_graph* g, size_t max_steps, char** out) {
  return guarded([&] {
    require(g && out, "mm_orbit_json: null argument");
    const metamour::OrbitReport o =
        metamour::orbit(g->graph, max_steps == 0 ? metamour::kDefaultOrbitSteps : max_steps);
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& it : o.iterates) sizes.push_back(it.size());
    nlohmann::json limit = nlohmann::json::array();
    for (const auto& it : o.limit_set()) {
      limit.push_back(it.order() <= metamour::kMaxGraph6Order
                          ? nlohmann::json(metamour::encode_graph6(it))
                          : nlohmann::json(nullptr));
    }
    nlohmann::json pseudo = nullptr;
    if (g->graph.order() <= metamour::kMaxCanonicalVertices) {
      const auto p = metamour::pseudo_metamour_period(o);
      if (p) pseudo = *p;
    }
    const nlohmann::json j = {{"order", g->graph.order()},
                              {"size", g->graph.size()},
                              {"preperiod", o.preperiod},
                              {"period", o.period},
                              {"metamour_period",
                               o.preperiod == 0 ? nlohmann::json(o.period) : nlohmann::json(nullptr)},
                              {"pseudo_period", pseudo},
                              {"iterate_sizes", sizes},
                              {"limit_set", limit}};
    *out = dup_string(j.dump());
  });
}

mm_status mm_run_suite(const char* name, const char* options_json, char** out) {
  return guarded([&] {
    require(name && out, "mm_run_suite: null argument");
    metamour::SuiteOptions o;
    if (options_json && *options_json) {
      const nlohmann::json j = nlohmann::json::parse(options_json);
      require(j.is_object(), "mm_run_suite: options must be a JSON object");
      o.max_n = get_size(j, "max_n", 0);
      o.jobs = get_size(j, "jobs", 0);
      o.include_disconnected = j.value("include_disconnected", false);
      o.samples = get_size(j, "samples", 0);
      o.seed = j.value("seed", std::uint64_t{1});
      o.m = get_size(j, "m", 0);
      o.j = get_size(j, "j", 0);
      o.h = get_size(j, "h", 0);
      o.n = get_size(j, "n", 0);
      o.q = get_size(j, "q", 0);
      if (j.contains("blocks")) {
        for (const auto& spec : j.at("blocks")) {
          o.blocks.push_back(metamour::parse_graph_spec(spec.get<std::string>()).graph);
        }
      }
    }
    *out = dup_string(metamour::run_suite(name, o).to_json().dump());
  });
}

mm_status mm_check_graph(const char* name, const mm_graph* g, char** out) {
  return guarded([&] {
    require(name && g && out, "mm_check_graph: null argument");
    const std::string n = name;
    metamour::TheoremReport r;
    if (n == "diameter") {
      r = metamour::check_diameter_equivalences(g->graph);
    } else if (n == "period2") {
      r = metamour::check_period2_structure(g->graph);
    } else {
      throw std::invalid_argument("no single-graph check named '" + n + "'");
    }
    *out = dup_string(r.to_json().dump());
  });
}

const char* mm_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : metamour::suite_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

void mm_string_free(char* s) { std::free(s); }

}  // extern "C"
