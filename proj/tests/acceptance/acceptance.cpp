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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Criterion 12 drives the installed CLI, whose path is baked
// in at build time as FRIEZE_CLI_PATH.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "frieze/fareygraph.hpp"
#include "frieze/formulas.hpp"
#include "frieze/pathcount.hpp"
#include "frieze/service.hpp"
#include "frieze/verify.hpp"
#include "frieze/window.hpp"

using namespace frieze;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGridSeconds = 60.0;
constexpr double kVerifySeconds = 300.0;
constexpr unsigned kRenderSamples = 50;
constexpr unsigned kLiftSamples = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

// Collects the checks of one verify suite whose names are listed, requiring
// at least `min_checks` of them and all passing.
Outcome from_suite(const VerifyOptions& options, const std::set<std::string>& names,
                   std::size_t min_checks) {
  const VerifyReport report = run_verify(options);
  Outcome out;
  std::size_t seen = 0, failed = 0;
  std::string first_failure;
  for (const auto& suite : report.suites) {
    for (const auto& c : suite.checks) {
      if (!names.count(c.name)) continue;
      ++seen;
      if (!c.pass) {
        ++failed;
        if (first_failure.empty()) {
          first_failure = c.name + " [" + c.params + "] expected " + c.expected + ", got " + c.actual;
        }
      }
    }
  }
  out.pass = failed == 0 && seen >= min_checks;
  out.detail = std::to_string(seen - failed) + "/" + std::to_string(seen) + " checks";
  if (seen < min_checks) out.detail += ", expected at least " + std::to_string(min_checks);
  if (!first_failure.empty()) out.detail += "; first failure " + first_failure;
  return out;
}

VerifyOptions suite_options(const std::string& suite) {
  VerifyOptions o;
  o.suite = suite;
  o.primes = {2, 3};
  o.r_max = 3;
  o.k_max = 3;
  o.samples = kLiftSamples;
  return o;
}

Outcome count_grid(FriezeKind kind) {
  const auto t0 = Clock::now();
  std::size_t cells = 0, bad = 0;
  std::string first;
  for (Int n = 2; n <= 12; ++n) {
    const FareyGraph G(n);
    for (unsigned m = 2; m <= 7; ++m) {
      ++cells;
      bool ok;
      if (kind == FriezeKind::kTame) {
        ok = tame_count_formula(n, m) == totient(n) * count_X(G, m);
      } else {
        const BigNat y = count_Y(G, m);
        ok = y % static_cast<unsigned long>(n) == 0 && regular_count_formula(n, m) * n == y;
      }
      if (!ok) {
        ++bad;
        if (first.empty()) first = " first mismatch n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome out;
  out.pass = bad == 0 && elapsed < kGridSeconds;
  out.detail = std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells equal in " +
               fmt_seconds(elapsed) + " (limit " + fmt_seconds(kGridSeconds) + ")" + first;
  return out;
}

Outcome criterion_spot_values() {
  std::vector<std::string> failures;
  auto expect = [&](const std::string& what, const BigNat& want, const BigNat& got) {
    if (want != got) failures.push_back(what + " = " + to_decimal(got) + " not " + to_decimal(want));
  };
  const FriezeCount t56 = count_friezes({5, 6, FriezeKind::kTame}, CountSource::kBoth);
  expect("tame(5,6) formula", 2084, *t56.formula);
  expect("tame(5,6) enumerated", 2084, *t56.enumerated);
  const FriezeCount t23 = count_friezes({2, 3, FriezeKind::kTame}, CountSource::kBoth);
  expect("tame(2,3) formula", 1, *t23.formula);
  expect("tame(2,3) enumerated", 1, *t23.enumerated);
  const auto xs = enumerate_X(FareyGraph(2), 3);
  if (xs.size() != 1 || xs.front().label() != "<1/0, 0/1, 1/1, 1/0>") {
    failures.push_back("X_3(2) enumeration gave " + std::to_string(xs.size()) + " paths");
  }
  const FriezeCount r24 = count_friezes({2, 4, FriezeKind::kRegular}, CountSource::kBoth);
  expect("regular(2,4) formula", 3, *r24.formula);
  expect("regular(2,4) enumerated", 3, *r24.enumerated);
  expect("count_Y(2,4)", 6, *r24.path_count);
  const FriezeCount r125 = count_friezes({12, 5, FriezeKind::kRegular}, CountSource::kBoth);
  expect("regular(12,5) formula", 200, *r125.formula);
  expect("regular(12,5) enumerated", 200, *r125.enumerated);
  Outcome out;
  out.pass = failures.empty();
  out.detail = failures.empty() ? "2084, 1 with <1/0, 0/1, 1/1, 1/0>, 3 with |Y|=6, 200"
                                : failures.front();
  return out;
}

Outcome criterion_crt() {
  return from_suite(suite_options("crt"),
                    {"crt-vertex-bijection", "crt-edge-bijection", "tensor-edge-count"}, 15);
}

Outcome criterion_path_lifts() {
  // p in {2,3}, (s, r) in {(1,2), (1,3), (2,3)}, both anchors.
  return from_suite(suite_options("lifting"), {"path-lifts-initial", "path-lifts-final"}, 12);
}

Outcome criterion_fibre_lifts() {
  // X: p in {2,3}, m in {3,4}, r in {2,3}, plus cover checks; Y: p in {2,3}.
  return from_suite(suite_options("lifting"), {"X-lift-count", "X-lifts-cover", "Y-lift-count"},
                    16 + 2);
}

Outcome criterion_middle_and_two_step() {
  const Outcome a = from_suite(suite_options("lemma4"), {"unique-middle-vertex"}, 3);
  const Outcome b = from_suite(suite_options("lemma7"), {"two-step-count"}, 3);
  return {a.pass && b.pass, "middle vertex " + a.detail + "; two-step " + b.detail};
}

Outcome criterion_recurrences() {
  return from_suite(suite_options("recurrence"),
                    {"z1", "z-recurrence", "zt-scaling", "zt-top-valuation", "z-closed-form",
                     "z-integer-sum", "w-closed-form", "aux-graph", "aux-graph-vs-W",
                     "aux-graph-from-E4"},
                    60);
}

Outcome criterion_partition() {
  return from_suite(suite_options("omega-partition"),
                    {"omega-inside-Y", "omega-size", "partition-disjoint-cover", "partition-sizes",
                     "omega-count-matches"},
                    15);
}

Outcome criterion_frieze_soundness() {
  const FriezeWindow fixture = fig1_fixture();
  const std::size_t diamond = check_diamond(fixture).size();
  const std::size_t tame = check_tame(fixture).size();
  const bool regular = is_regular(fixture);

  std::size_t windows = 0, bad_windows = 0;
  std::uint64_t seed = 42;
  for (Int n = 2; n <= 8; ++n) {
    for (unsigned m = 2; m <= 6; ++m) {
      for (unsigned s = 0; s < kRenderSamples; ++s) {
        const RenderResult r = render_seeded(n, m, seed++);
        ++windows;
        bad_windows += !check_boundary(r.window).empty() || !check_diamond(r.window).empty() ||
                       !check_tame(r.window).empty() || !is_regular(r.window);
      }
    }
  }
  Outcome out;
  out.pass = diamond == 0 && tame == 0 && regular && bad_windows == 0;
  out.detail = "fixture diamond violations " + std::to_string(diamond) + ", tame violations " +
               std::to_string(tame) + ", regular " + (regular ? "yes" : "NO (row m-1 is 2 3 2 3)") +
               "; rendered " + std::to_string(windows - bad_windows) + "/" +
               std::to_string(windows) + " windows pass all checks";
  return out;
}

Outcome criterion_field_consistency() {
  std::size_t cases = 0, bad = 0;
  for (Int p : {2, 3, 5, 7}) {
    for (unsigned m = 2; m <= 9; ++m) {
      ++cases;
      bad += phi_field(p, m) != phi_m(p, 1, m);
    }
  }
  const BigNat phi68 = phi_m(2, 3, 6);
  Outcome out;
  out.pass = bad == 0 && phi68 == 800;
  out.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
               " field cases equal; prime-power count at n=8, m=6 is " + to_decimal(phi68);
  return out;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome criterion_determinism() {
  const std::string cmd = std::string("'") + FRIEZE_CLI_PATH +
                          "' verify --suite all --seed 42 2>/dev/null";
  const auto t0 = Clock::now();
  const RunResult a = run(cmd);
  const double first = seconds_since(t0);
  const RunResult b = run(cmd);
  Outcome out;
  out.pass = a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty() &&
             first < kVerifySeconds;
  out.detail = "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
               std::to_string(a.out.size()) + " bytes, " +
               (a.out == b.out ? "identical" : "DIFFERENT") + ", first run " +
               fmt_seconds(first) + " (limit " + fmt_seconds(kVerifySeconds) + ")";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tame count grid n<=12, m<=7", [] { return count_grid(FriezeKind::kTame); }},
      {"regular count grid n<=12, m<=7", [] { return count_grid(FriezeKind::kRegular); }},
      {"spot values", criterion_spot_values},
      {"CRT isomorphisms", criterion_crt},
      {"path lifting counts", criterion_path_lifts},
      {"lifts into X and Y", criterion_fibre_lifts},
      {"middle vertex and two-step counts", criterion_middle_and_two_step},
      {"alternating-path recurrences and closed forms", criterion_recurrences},
      {"semiclosed path partition", criterion_partition},
      {"frieze soundness", criterion_frieze_soundness},
      {"field and prime-power consistency", criterion_field_consistency},
      {"verify determinism and runtime", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " -- " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
