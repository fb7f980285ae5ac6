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

// frieze: command line front end over the C interface.
//
//   frieze count <tame|regular> --n N --m M [--method formula|enumerate|both]
//   frieze table <tame|regular> --n-max N --m-max M [--format csv|json]
//   frieze graph --n N [--format dot|json]
//   frieze render --n N --m M (--index I | --seed S) [--periods P]
//   frieze verify [--suite NAME] [--seed S] ...
//
// Exit status: 0 success or match, 1 mismatch or failed check, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze/frieze.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Owns a string handed out by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { frz_string_free(p); }
  const char* get() const { return p != nullptr ? p : ""; }
};

int report(frz_status status) {
  std::cerr << "frieze: " << frz_status_name(status) << ": " << frz_last_error() << "\n";
  switch (status) {
    case FRZ_ERR_INVALID_ARGUMENT:
    case FRZ_ERR_INVALID_PARAMS:
    case FRZ_ERR_OUT_OF_RANGE:
    case FRZ_ERR_PARSE:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void print(const char* text) {
  std::fputs(text, stdout);
  std::fflush(stdout);
}

const std::map<std::string, frz_kind> kKinds = {{"tame", FRZ_KIND_TAME},
                                                {"regular", FRZ_KIND_REGULAR}};
const std::map<std::string, frz_method> kMethods = {{"formula", FRZ_METHOD_FORMULA},
                                                    {"enumerate", FRZ_METHOD_ENUMERATE},
                                                    {"both", FRZ_METHOD_BOTH}};

struct CountArgs {
  std::string kind;
  int64_t n = 0;
  unsigned m = 0;
  std::string method = "both";
  bool unsafe_large = false;
  bool use_cache = false;
  std::string cache_dir;
};

struct TableArgs {
  std::string kind;
  int64_t n_max = 0;
  unsigned m_max = 0;
  std::string format = "csv";
  bool unsafe_large = false;
};

struct GraphArgs {
  int64_t n = 0;
  std::string format = "dot";
  bool unsafe_large = false;
};

struct RenderArgs {
  int64_t n = 0;
  unsigned m = 0;
  std::string index;
  std::optional<uint64_t> seed;
  unsigned periods = 1;
  std::string format = "text";
  bool unsafe_large = false;
};

struct VerifyArgs {
  std::string suite = "all";
  int64_t n_max = 12;
  unsigned m_max = 7;
  std::vector<int64_t> primes = {2, 3};
  unsigned r_max = 3;
  unsigned k_max = 3;
  uint64_t seed = 42;
  unsigned samples = 50;
  bool unsafe_large = false;
  std::string cache_dir;
};

int run_count(const CountArgs& a) {
  std::string dir = a.cache_dir;
  if (dir.empty() && a.use_cache) {
    const char* env = std::getenv("FRIEZE_CACHE_DIR");
    if (env == nullptr || *env == '\0') {
      std::cerr << "frieze: --cache needs FRIEZE_CACHE_DIR to be set\n";
      return kExitUsage;
    }
    dir = env;
  }
  const frz_count_options options{a.unsafe_large ? 1 : 0, dir.empty() ? nullptr : dir.c_str()};
  Owned json;
  int match = 0;
  const frz_status s =
      frz_count(kKinds.at(a.kind), a.n, a.m, kMethods.at(a.method), &options, &json.p, &match);
  if (s != FRZ_OK) return report(s);
  print(json.get());
  if (match == 0) {
    std::cerr << "frieze: formula and enumeration disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_table(const TableArgs& a) {
  Owned out;
  int all_match = 0;
  const frz_status s = frz_table(kKinds.at(a.kind), a.n_max, a.m_max,
                                 a.format == "csv" ? FRZ_FORMAT_CSV : FRZ_FORMAT_JSON,
                                 a.unsafe_large ? 1 : 0, &out.p, &all_match);
  if (s != FRZ_OK) return report(s);
  print(out.get());
  if (all_match == 0) {
    std::cerr << "frieze: some rows disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_graph(const GraphArgs& a) {
  frz_graph* g = nullptr;
  frz_status s = frz_graph_new(a.n, a.unsafe_large ? 1 : 0, &g);
  if (s != FRZ_OK) return report(s);
  Owned out;
  s = frz_graph_export(g, a.format == "dot" ? FRZ_FORMAT_DOT : FRZ_FORMAT_JSON, &out.p);
  frz_graph_free(g);
  if (s != FRZ_OK) return report(s);
  print(out.get());
  return kExitOk;
}

int run_render(const RenderArgs& a) {
  frz_window* w = nullptr;
  const frz_status s =
      a.seed ? frz_render_seed(a.n, a.m, *a.seed, a.periods, a.unsafe_large ? 1 : 0, &w)
             : frz_render_index(a.n, a.m, a.index.empty() ? "0" : a.index.c_str(), a.periods,
                                a.unsafe_large ? 1 : 0, &w);
  if (s != FRZ_OK) return report(s);

  Owned text, path;
  frz_check_result check{};
  frz_status t = frz_window_export(w, a.format == "json" ? FRZ_FORMAT_JSON : FRZ_FORMAT_TEXT,
                                   &text.p);
  if (t == FRZ_OK) t = frz_window_path(w, &path.p);
  if (t == FRZ_OK) t = frz_window_check(w, &check);
  frz_window_free(w);
  if (t != FRZ_OK) return report(t);

  print(text.get());
  std::cerr << "path " << path.get() << "\n";
  const uint64_t violations =
      check.boundary_violations + check.diamond_violations + check.tame_violations;
  if (violations != 0 || check.regular == 0) {
    std::cerr << "frieze: rendered window fails its checks (boundary "
              << check.boundary_violations << ", diamond " << check.diamond_violations
              << ", tame " << check.tame_violations << ", regular " << check.regular << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  frz_verify_options o;
  frz_verify_options_init(&o);
  o.suite = a.suite.c_str();
  o.n_max = a.n_max;
  o.m_max = a.m_max;
  o.primes = a.primes.data();
  o.prime_count = a.primes.size();
  o.r_max = a.r_max;
  o.k_max = a.k_max;
  o.seed = a.seed;
  o.samples = a.samples;
  o.unsafe_large = a.unsafe_large ? 1 : 0;
  o.cache_dir = a.cache_dir.empty() ? nullptr : a.cache_dir.c_str();
  Owned json, summary;
  int passed = 0;
  const frz_status s = frz_verify(&o, &json.p, &summary.p, &passed);
  if (s != FRZ_OK) return report(s);
  print(json.get());
  std::cerr << summary.get();
  return passed != 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and checking friezes over Z/nZ"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "count friezes by formula and by path counting");
  count_cmd->add_option("kind", count.kind, "tame or regular")
      ->required()
      ->check(CLI::IsMember({"tame", "regular"}));
  count_cmd->add_option("--n", count.n, "modulus")->required();
  count_cmd->add_option("--m", count.m, "width")->required();
  count_cmd->add_option("--method", count.method, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  count_cmd->add_flag("--unsafe-large", count.unsafe_large, "lift the desk-scale bounds");
  count_cmd->add_flag("--cache", count.use_cache, "use the cache in $FRIEZE_CACHE_DIR");
  count_cmd->add_option("--cache-dir", count.cache_dir, "use the cache in this directory");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "formula against path counts over a grid");
  table_cmd->add_option("kind", table.kind, "tame or regular")
      ->required()
      ->check(CLI::IsMember({"tame", "regular"}));
  table_cmd->add_option("--n-max", table.n_max, "largest modulus")->required();
  table_cmd->add_option("--m-max", table.m_max, "largest width")->required();
  table_cmd->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_flag("--unsafe-large", table.unsafe_large, "lift the desk-scale bounds");

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "export the Farey graph E_n");
  graph_cmd->add_option("--n", graph.n, "modulus")->required();
  graph_cmd->add_option("--format", graph.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_flag("--unsafe-large", graph.unsafe_large, "lift the desk-scale bounds");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "render the regular frieze of a semiclosed path");
  render_cmd->add_option("--n", render.n, "modulus")->required();
  render_cmd->add_option("--m", render.m, "width")->required();
  auto* index_opt = render_cmd->add_option("--index", render.index, "path index (decimal)");
  auto* seed_opt = render_cmd->add_option("--seed", render.seed, "sample a path with this seed");
  index_opt->excludes(seed_opt);
  render_cmd->add_option("--periods", render.periods, "number of periods to print")
      ->check(CLI::Range(1U, 64U));
  render_cmd->add_option("--format", render.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  render_cmd->add_flag("--unsafe-large", render.unsafe_large, "lift the desk-scale bounds");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", verify.suite, "suite name or all");
  verify_cmd->add_option("--n-max", verify.n_max, "largest modulus for the count grids");
  verify_cmd->add_option("--m-max", verify.m_max, "largest width for the count grids");
  verify_cmd->add_option("--primes", verify.primes, "primes for the lifting suites")
      ->delimiter(',');
  verify_cmd->add_option("--r-max", verify.r_max, "largest exponent r");
  verify_cmd->add_option("--k-max", verify.k_max, "largest k for the recurrences");
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled checks");
  verify_cmd->add_option("--samples", verify.samples, "samples per sampled configuration");
  verify_cmd->add_flag("--unsafe-large", verify.unsafe_large, "lift the desk-scale bounds");
  verify_cmd->add_option("--cache-dir", verify.cache_dir, "recompute every entry of this cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*count_cmd) return run_count(count);
  if (*table_cmd) return run_table(table);
  if (*graph_cmd) return run_graph(graph);
  if (*render_cmd) return run_render(render);
  return run_verify(verify);
}
