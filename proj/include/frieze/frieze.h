// Copyright 2026 The Frieze Authors
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

/* C interface to the frieze library. Every function returns a frz_status;
 * on failure a message is available from frz_last_error() on the calling
 * thread. Strings handed out through char** parameters are owned by the
 * caller and released with frz_string_free(). Counts travel as decimal
 * strings because they outgrow 64 bits quickly. */

#ifndef FRIEZE_FRIEZE_H
#define FRIEZE_FRIEZE_H

#include <stddef.h>
#include <stdint.h>

#if defined(FRIEZE_BUILDING_LIBRARY)
#define FRZ_API __attribute__((visibility("default")))
#else
#define FRZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frz_status {
  FRZ_OK = 0,
  FRZ_ERR_INVALID_ARGUMENT = 1, /* malformed value: bad vertex, non-unit, ... */
  FRZ_ERR_INVALID_PARAMS = 2,   /* well-formed but outside the supported range */
  FRZ_ERR_OUT_OF_RANGE = 3,     /* index past the end of an enumeration */
  FRZ_ERR_PARSE = 4,
  FRZ_ERR_LIMIT = 5,            /* enumeration cap hit */
  FRZ_ERR_IO = 6,
  FRZ_ERR_DOMAIN = 7,           /* arithmetic had no valid answer */
  FRZ_ERR_INTERNAL = 8
} frz_status;

typedef enum frz_kind { FRZ_KIND_TAME = 0, FRZ_KIND_REGULAR = 1 } frz_kind;

typedef enum frz_method {
  FRZ_METHOD_FORMULA = 0,
  FRZ_METHOD_ENUMERATE = 1,
  FRZ_METHOD_BOTH = 2
} frz_method;

typedef enum frz_format {
  FRZ_FORMAT_JSON = 0,
  FRZ_FORMAT_CSV = 1,
  FRZ_FORMAT_DOT = 2,
  FRZ_FORMAT_TEXT = 3
} frz_format;

typedef struct frz_graph frz_graph;
typedef struct frz_window frz_window;

FRZ_API const char* frz_version(void);
FRZ_API const char* frz_status_name(frz_status status);
/* Message of the last failed call on this thread ("" if none). */
FRZ_API const char* frz_last_error(void);
FRZ_API void frz_string_free(char* s);

/* Farey graph E_n. n is capped at 60 unless unsafe_large is nonzero. */
FRZ_API frz_status frz_graph_new(int64_t n, int unsafe_large, frz_graph** out);
FRZ_API void frz_graph_free(frz_graph* graph);
FRZ_API frz_status frz_graph_vertex_count(const frz_graph* graph, uint64_t* out);
FRZ_API frz_status frz_graph_edge_count(const frz_graph* graph, uint64_t* out);
/* FRZ_FORMAT_DOT or FRZ_FORMAT_JSON. */
FRZ_API frz_status frz_graph_export(const frz_graph* graph, frz_format format, char** out);

typedef struct frz_count_options {
  int unsafe_large;
  const char* cache_dir; /* NULL disables the on-disk cache */
} frz_count_options;

/* Counts friezes of the given kind over Z/nZ of width m. json receives the
 * report; match is 1 unless both routes ran and disagree. options may be
 * NULL. Either output pointer may be NULL. */
FRZ_API frz_status frz_count(frz_kind kind, int64_t n, unsigned m, frz_method method,
                             const frz_count_options* options, char** json, int* match);

/* Decimal counts of one query; NULL is stored for a route that did not run. */
FRZ_API frz_status frz_count_values(frz_kind kind, int64_t n, unsigned m, frz_method method,
                                    const frz_count_options* options, char** formula,
                                    char** enumerated);

/* Table over 2 <= n <= n_max, 2 <= m <= m_max in FRZ_FORMAT_CSV or
 * FRZ_FORMAT_JSON. all_match is 1 iff every row agrees. */
FRZ_API frz_status frz_table(frz_kind kind, int64_t n_max, unsigned m_max, frz_format format,
                             int unsafe_large, char** out, int* all_match);

/* Regular frieze of the index-th semiclosed path in canonical order, index
 * given in decimal. */
FRZ_API frz_status frz_render_index(int64_t n, unsigned m, const char* index, unsigned periods,
                                    int unsafe_large, frz_window** out);
/* Same, with the path drawn uniformly from a seeded generator. */
FRZ_API frz_status frz_render_seed(int64_t n, unsigned m, uint64_t seed, unsigned periods,
                                   int unsafe_large, frz_window** out);

/* Parses FRZ_FORMAT_TEXT or FRZ_FORMAT_JSON. */
FRZ_API frz_status frz_window_parse(const char* data, frz_format format, frz_window** out);
FRZ_API void frz_window_free(frz_window* window);
FRZ_API frz_status frz_window_export(const frz_window* window, frz_format format, char** out);
/* Label of the path a rendered window came from; "" for parsed windows. */
FRZ_API frz_status frz_window_path(const frz_window* window, char** out);
FRZ_API frz_status frz_window_shape(const frz_window* window, int64_t* n, unsigned* m,
                                    uint64_t* period);

typedef struct frz_check_result {
  uint64_t boundary_violations;
  uint64_t diamond_violations;
  uint64_t tame_violations;
  int regular;
} frz_check_result;

FRZ_API frz_status frz_window_check(const frz_window* window, frz_check_result* out);

typedef struct frz_verify_options {
  const char* suite; /* a suite name or "all" */
  int64_t n_max;
  unsigned m_max;
  const int64_t* primes;
  size_t prime_count;
  unsigned r_max;
  unsigned k_max;
  uint64_t seed;
  unsigned samples;
  int unsafe_large;
  const char* cache_dir; /* entries found there are recomputed */
} frz_verify_options;

/* Fills in the defaults: all suites, n <= 12, m <= 7, primes 2 and 3,
 * r <= 3, k <= 3, seed 42, 50 samples. */
FRZ_API void frz_verify_options_init(frz_verify_options* options);

/* json and summary may be NULL. passed is 1 iff every check passed. */
FRZ_API frz_status frz_verify(const frz_verify_options* options, char** json, char** summary,
                              int* passed);

#ifdef __cplusplus
}
#endif

#endif /* FRIEZE_FRIEZE_H */
