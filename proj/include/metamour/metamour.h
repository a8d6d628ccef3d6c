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

/* C interface to the metamour library.
 *
 * Graphs are opaque handles owned by the caller and released with
 * mm_graph_free. Strings returned through char** are heap-allocated and
 * released with mm_string_free. Every call that can fail returns an
 * mm_status; on failure mm_last_error() describes the problem (per thread).
 */

#ifndef METAMOUR_METAMOUR_H_
#define METAMOUR_METAMOUR_H_

#include <stddef.h>

#if defined(METAMOUR_BUILDING_LIBRARY)
#define MM_API __attribute__((visibility("default")))
#else
#define MM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mm_graph mm_graph;

typedef enum mm_status {
  MM_OK = 0,
  MM_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad vertex, bad parameter */
  MM_ERR_PARSE = 2,            /* graph spec, graph6, edge list or JSON */
  MM_ERR_SIZE_LIMIT = 3,       /* input larger than an operation supports */
  MM_ERR_UNSUPPORTED = 4,      /* well-formed but not implemented */
  MM_ERR_ORBIT_BOUND = 5,      /* no repeat within the iteration bound */
  MM_ERR_INTERNAL = 6
} mm_status;

MM_API const char* mm_version(void);
MM_API const char* mm_status_name(mm_status status);
/* Message for the last failing call on this thread; "" when none. */
MM_API const char* mm_last_error(void);

/* edges holds edge_count pairs as 2 * edge_count vertex ids. */
MM_API mm_status mm_graph_create(size_t n, const size_t* edges, size_t edge_count,
                                 mm_graph** out);
/* Graph spec language, e.g. "cycle:7", "petersen:5,2", "g6:Dhc". */
MM_API mm_status mm_graph_parse(const char* spec, mm_graph** out);
MM_API mm_status mm_graph_from_graph6(const char* text, mm_graph** out);
MM_API mm_status mm_graph_clone(const mm_graph* g, mm_graph** out);
MM_API void mm_graph_free(mm_graph* g);

MM_API size_t mm_graph_order(const mm_graph* g);
MM_API size_t mm_graph_size(const mm_graph* g);
MM_API mm_status mm_graph_adjacent(const mm_graph* g, size_t x, size_t y, int* out);
MM_API mm_status mm_graph_equal(const mm_graph* a, const mm_graph* b, int* out);
MM_API mm_status mm_graph_isomorphic(const mm_graph* a, const mm_graph* b, int* out);

MM_API mm_status mm_metamour(const mm_graph* g, mm_graph** out);
MM_API mm_status mm_iterate(const mm_graph* g, size_t k, mm_graph** out);

MM_API mm_status mm_to_graph6(const mm_graph* g, char** out);
/* Family labels (v0/u0 for Petersen, r.0.1 for trees) when with_labels is
 * nonzero and the graph came from a spec that defines them. */
MM_API mm_status mm_to_dot(const mm_graph* g, int with_labels, char** out);
MM_API mm_status mm_to_edgelist(const mm_graph* g, char** out);

/* JSON object: order, size, preperiod, period, pseudo_period, edge counts of
 * every iterate, and the limit set in graph6 (null above 62 vertices).
 * max_steps = 0 uses the library default. */
MM_API mm_status mm_orbit_json(const mm_graph* g, size_t max_steps, char** out);

/* Runs a named theorem suite. options_json may be NULL or a JSON object with
 * any of: max_n, jobs, include_disconnected, samples, seed, m, j, h, n, q,
 * blocks (array of graph specs). The report is written as JSON; a failing
 * theorem still returns MM_OK with "verdict": "fail". */
MM_API mm_status mm_run_suite(const char* name, const char* options_json, char** out);
/* Single-graph checks: "diameter" or "period2". */
MM_API mm_status mm_check_graph(const char* name, const mm_graph* g, char** out);
/* Space-separated suite names. */
MM_API const char* mm_suite_names(void);

MM_API void mm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* METAMOUR_METAMOUR_H_ */
