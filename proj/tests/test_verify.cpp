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

#include <doctest.h>
#include <json.hpp>

#include <filesystem>

#include "frieze/service.hpp"
#include "frieze/verify.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

VerifyOptions small(const std::string& suite) {
  VerifyOptions o;
  o.suite = suite;
  o.n_max = 6;
  o.m_max = 5;
  o.samples = 5;
  o.r_max = 2;
  o.k_max = 2;
  return o;
}

}  // namespace

TEST_CASE("every suite passes on a small grid") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const VerifyReport report = run_verify(small(name));
    REQUIRE(report.suites.size() == 1);
    CHECK(report.suites.front().name == name);
    CHECK(report.check_count() > 0);
    CHECK(report.failure_count() == 0);
    CHECK(report.pass());
  }
}

TEST_CASE("verify output is deterministic and echoes the seed") {
  VerifyOptions o = small("frieze-render");
  o.seed = 1234;
  const std::string a = run_verify(o).to_json();
  CHECK(a == run_verify(o).to_json());
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["seed"] == 1234);
  CHECK(doc["pass"] == true);
  CHECK(doc["suites"][0]["checks"].size() > 0);
}

TEST_CASE("summary flags failures") {
  VerifyReport report;
  report.seed = 3;
  report.suites.push_back({"demo", {{"a", "x=1", "1", "1", true}, {"b", "x=2", "4", "5", false}}});
  CHECK_FALSE(report.pass());
  CHECK(report.failure_count() == 1);
  const std::string s = report.summary();
  CHECK(s.find("FAIL demo: 1/2 checks") != std::string::npos);
  CHECK(s.find("failed b [x=2] expected 4, got 5") != std::string::npos);
}

TEST_CASE("verify parameter errors") {
  VerifyOptions o;
  o.suite = "nope";
  CHECK(code_of([&] { run_verify(o); }) == ErrorCode::kInvalidParams);
  o = small("crt");
  o.primes = {4};
  CHECK(code_of([&] { run_verify(o); }) == ErrorCode::kInvalidParams);
  o = small("theorem-a");
  o.n_max = 13;
  CHECK(code_of([&] { run_verify(o); }) == ErrorCode::kInvalidParams);
  o.unsafe_large = true;
  o.n_max = 7;
  CHECK(run_verify(o).pass());
}

TEST_CASE("cached counts are spot-checked") {
  const auto dir = std::filesystem::temp_directory_path() / "frieze_verify_cache";
  std::filesystem::remove_all(dir);
  {
    CountCache cache(dir.string());
    count_friezes({6, 4, FriezeKind::kTame}, CountSource::kBoth, {false, &cache});
    cache.store("regular:n=5:m=4:formula", 999);
    cache.save();
  }
  VerifyOptions o = small("lemma7");
  o.cache_dir = dir.string();
  const VerifyReport report = run_verify(o);
  REQUIRE(report.suites.size() == 2);
  const SuiteResult& cache = report.suites.back();
  CHECK(cache.name == "cache");
  CHECK(cache.checks.size() == 4);
  std::size_t failed = 0;
  for (const auto& c : cache.checks) failed += !c.pass;
  CHECK(failed == 1);
  std::filesystem::remove_all(dir);
}
