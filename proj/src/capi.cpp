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

#include "frieze/frieze.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "frieze/error.hpp"
#include "frieze/fareygraph.hpp"
#include "frieze/serialize.hpp"
#include "frieze/service.hpp"
#include "frieze/verify.hpp"
#include "frieze/window.hpp"

struct frz_graph {
  frieze::FareyGraph graph;
};

struct frz_window {
  frieze::FriezeWindow window;
  std::string path;
};

namespace {

using frieze::Error;
using frieze::ErrorCode;

thread_local std::string last_error;

frz_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kInvalidModulus:
      return FRZ_ERR_INVALID_PARAMS;
    case ErrorCode::kOutOfRange:
      return FRZ_ERR_OUT_OF_RANGE;
    case ErrorCode::kParse:
      return FRZ_ERR_PARSE;
    case ErrorCode::kLimitExceeded:
      return FRZ_ERR_LIMIT;
    case ErrorCode::kIo:
      return FRZ_ERR_IO;
    case ErrorCode::kNoTransporter:
    case ErrorCode::kNonIntegerResult:
      return FRZ_ERR_DOMAIN;
    default:
      return FRZ_ERR_INVALID_ARGUMENT;
  }
}

frz_status fail(frz_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
frz_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return FRZ_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FRZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FRZ_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = dup(s);
}

frieze::FriezeKind kind_of(frz_kind kind) {
  switch (kind) {
    case FRZ_KIND_TAME:
      return frieze::FriezeKind::kTame;
    case FRZ_KIND_REGULAR:
      return frieze::FriezeKind::kRegular;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown frieze kind");
}

frieze::CountSource source_of(frz_method method) {
  switch (method) {
    case FRZ_METHOD_FORMULA:
      return frieze::CountSource::kFormula;
    case FRZ_METHOD_ENUMERATE:
      return frieze::CountSource::kEnumerate;
    case FRZ_METHOD_BOTH:
      return frieze::CountSource::kBoth;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown count method");
}

frieze::FriezeCount run_count(frz_kind kind, int64_t n, unsigned m, frz_method method,
                              const frz_count_options* options) {
  const bool unsafe = options != nullptr && options->unsafe_large != 0;
  const char* dir = options != nullptr ? options->cache_dir : nullptr;
  const frieze::FriezeCountQuery query{n, m, kind_of(kind)};
  if (dir == nullptr || *dir == '\0') {
    return frieze::count_friezes(query, source_of(method), {unsafe, nullptr});
  }
  frieze::CountCache cache(dir);
  auto result = frieze::count_friezes(query, source_of(method), {unsafe, &cache});
  cache.save();
  return result;
}

template <typename T>
frz_status need(const T* p, const char* what) {
  return p != nullptr ? FRZ_OK : fail(FRZ_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* frz_version(void) { return "1.0.0"; }

const char* frz_status_name(frz_status status) {
  switch (status) {
    case FRZ_OK: return "ok";
    case FRZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FRZ_ERR_INVALID_PARAMS: return "invalid parameters";
    case FRZ_ERR_OUT_OF_RANGE: return "out of range";
    case FRZ_ERR_PARSE: return "parse error";
    case FRZ_ERR_LIMIT: return "limit exceeded";
    case FRZ_ERR_IO: return "i/o error";
    case FRZ_ERR_DOMAIN: return "no valid result";
    case FRZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* frz_last_error(void) { return last_error.c_str(); }

void frz_string_free(char* s) { std::free(s); }

frz_status frz_graph_new(int64_t n, int unsafe_large, frz_graph** out) {
  if (auto s = need(out, "out")) return s;
  *out = nullptr;
  return guarded([&] {
    if (n < 2 || (unsafe_large == 0 && n > frieze::kMaxGraphModulus)) {
      throw Error(ErrorCode::kInvalidParams,
                  "n must be in 2.." + std::to_string(frieze::kMaxGraphModulus) +
                      " (or use unsafe_large)");
    }
    *out = new frz_graph{frieze::FareyGraph(n)};
  });
}

void frz_graph_free(frz_graph* graph) { delete graph; }

frz_status frz_graph_vertex_count(const frz_graph* graph, uint64_t* out) {
  if (auto s = need(graph, "graph")) return s;
  if (auto s = need(out, "out")) return s;
  *out = graph->graph.vertex_count();
  return FRZ_OK;
}

frz_status frz_graph_edge_count(const frz_graph* graph, uint64_t* out) {
  if (auto s = need(graph, "graph")) return s;
  if (auto s = need(out, "out")) return s;
  *out = graph->graph.edge_count();
  return FRZ_OK;
}

frz_status frz_graph_export(const frz_graph* graph, frz_format format, char** out) {
  if (auto s = need(graph, "graph")) return s;
  if (auto s = need(out, "out")) return s;
  return guarded([&] {
    switch (format) {
      case FRZ_FORMAT_DOT:
        put(out, frieze::graph_to_dot(graph->graph));
        return;
      case FRZ_FORMAT_JSON:
        put(out, frieze::graph_to_json(graph->graph));
        return;
      default:
        throw Error(ErrorCode::kInvalidArgument, "graphs export as dot or json");
    }
  });
}

frz_status frz_count(frz_kind kind, int64_t n, unsigned m, frz_method method,
                     const frz_count_options* options, char** json, int* match) {
  return guarded([&] {
    const auto result = run_count(kind, n, m, method, options);
    put(json, frieze::frieze_count_to_json(result));
    if (match != nullptr) *match = result.match() ? 1 : 0;
  });
}

frz_status frz_count_values(frz_kind kind, int64_t n, unsigned m, frz_method method,
                            const frz_count_options* options, char** formula,
                            char** enumerated) {
  return guarded([&] {
    const auto result = run_count(kind, n, m, method, options);
    if (formula != nullptr) *formula = result.formula ? dup(frieze::to_decimal(*result.formula)) : nullptr;
    if (enumerated != nullptr) {
      *enumerated = result.enumerated ? dup(frieze::to_decimal(*result.enumerated)) : nullptr;
    }
  });
}

frz_status frz_table(frz_kind kind, int64_t n_max, unsigned m_max, frz_format format,
                     int unsafe_large, char** out, int* all_match) {
  return guarded([&] {
    if (format != FRZ_FORMAT_CSV && format != FRZ_FORMAT_JSON) {
      throw Error(ErrorCode::kInvalidArgument, "tables export as csv or json");
    }
    const auto rows = frieze::count_table(kind_of(kind), n_max, m_max, unsafe_large != 0);
    put(out, format == FRZ_FORMAT_CSV ? frieze::table_to_csv(rows) : frieze::table_to_json(rows));
    if (all_match != nullptr) {
      *all_match = 1;
      for (const auto& row : rows) {
        if (!row.match()) *all_match = 0;
      }
    }
  });
}

frz_status frz_render_index(int64_t n, unsigned m, const char* index, unsigned periods,
                            int unsafe_large, frz_window** out) {
  if (auto s = need(index, "index")) return s;
  if (auto s = need(out, "out")) return s;
  *out = nullptr;
  return guarded([&] {
    frieze::BigNat value;
    if (*index == '\0' || value.set_str(index, 10) != 0 || value < 0) {
      throw Error(ErrorCode::kInvalidArgument, std::string("bad index '") + index + "'");
    }
    auto result = frieze::render_indexed(n, m, value, periods, unsafe_large != 0);
    *out = new frz_window{std::move(result.window), result.path.label()};
  });
}

frz_status frz_render_seed(int64_t n, unsigned m, uint64_t seed, unsigned periods,
                           int unsafe_large, frz_window** out) {
  if (auto s = need(out, "out")) return s;
  *out = nullptr;
  return guarded([&] {
    auto result = frieze::render_seeded(n, m, seed, periods, unsafe_large != 0);
    *out = new frz_window{std::move(result.window), result.path.label()};
  });
}

frz_status frz_window_parse(const char* data, frz_format format, frz_window** out) {
  if (auto s = need(data, "data")) return s;
  if (auto s = need(out, "out")) return s;
  *out = nullptr;
  return guarded([&] {
    switch (format) {
      case FRZ_FORMAT_TEXT:
        *out = new frz_window{frieze::window_from_text(data), ""};
        return;
      case FRZ_FORMAT_JSON:
        *out = new frz_window{frieze::window_from_json(data), ""};
        return;
      default:
        throw Error(ErrorCode::kInvalidArgument, "windows parse from text or json");
    }
  });
}

void frz_window_free(frz_window* window) { delete window; }

frz_status frz_window_export(const frz_window* window, frz_format format, char** out) {
  if (auto s = need(window, "window")) return s;
  if (auto s = need(out, "out")) return s;
  return guarded([&] {
    switch (format) {
      case FRZ_FORMAT_TEXT:
        put(out, frieze::window_to_text(window->window));
        return;
      case FRZ_FORMAT_JSON:
        put(out, frieze::window_to_json(window->window));
        return;
      default:
        throw Error(ErrorCode::kInvalidArgument, "windows export as text or json");
    }
  });
}

frz_status frz_window_path(const frz_window* window, char** out) {
  if (auto s = need(window, "window")) return s;
  if (auto s = need(out, "out")) return s;
  return guarded([&] { put(out, window->path); });
}

frz_status frz_window_shape(const frz_window* window, int64_t* n, unsigned* m,
                            uint64_t* period) {
  if (auto s = need(window, "window")) return s;
  if (n != nullptr) *n = window->window.modulus();
  if (m != nullptr) *m = window->window.width();
  if (period != nullptr) *period = window->window.period();
  return FRZ_OK;
}

frz_status frz_window_check(const frz_window* window, frz_check_result* out) {
  if (auto s = need(window, "window")) return s;
  if (auto s = need(out, "out")) return s;
  return guarded([&] {
    out->boundary_violations = frieze::check_boundary(window->window).size();
    out->diamond_violations = frieze::check_diamond(window->window).size();
    out->tame_violations = frieze::check_tame(window->window).size();
    out->regular = frieze::is_regular(window->window) ? 1 : 0;
  });
}

void frz_verify_options_init(frz_verify_options* options) {
  if (options == nullptr) return;
  static const int64_t default_primes[] = {2, 3};
  const frieze::VerifyOptions d;
  options->suite = "all";
  options->n_max = d.n_max;
  options->m_max = d.m_max;
  options->primes = default_primes;
  options->prime_count = 2;
  options->r_max = d.r_max;
  options->k_max = d.k_max;
  options->seed = d.seed;
  options->samples = d.samples;
  options->unsafe_large = 0;
  options->cache_dir = nullptr;
}

frz_status frz_verify(const frz_verify_options* options, char** json, char** summary,
                      int* passed) {
  if (auto s = need(options, "options")) return s;
  return guarded([&] {
    frieze::VerifyOptions o;
    if (options->suite != nullptr) o.suite = options->suite;
    o.n_max = options->n_max;
    o.m_max = options->m_max;
    if (options->primes == nullptr && options->prime_count > 0) {
      throw Error(ErrorCode::kInvalidArgument, "primes is null");
    }
    o.primes.assign(options->primes, options->primes + options->prime_count);
    o.r_max = options->r_max;
    o.k_max = options->k_max;
    o.seed = options->seed;
    o.samples = options->samples;
    o.unsafe_large = options->unsafe_large != 0;
    if (options->cache_dir != nullptr && *options->cache_dir != '\0') {
      o.cache_dir = options->cache_dir;
    }
    const auto report = frieze::run_verify(o);
    put(json, report.to_json());
    put(summary, report.summary());
    if (passed != nullptr) *passed = report.pass() ? 1 : 0;
  });
}

}  // extern "C"
