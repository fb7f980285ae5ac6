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

#ifndef FRIEZE_VERIFY_HPP
#define FRIEZE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frieze/modring.hpp"

namespace frieze {

/// Parameters of a verification run. Each suite checks the identities it
/// owns by direct computation; nothing is assumed from a closed form.
struct VerifyOptions {
  std::string suite = "all";
  Int n_max = 12;
  unsigned m_max = 7;
  std::vector<Int> primes = {2, 3};
  unsigned r_max = 3;
  unsigned k_max = 3;
  std::uint64_t seed = 42;
  unsigned samples = 50;
  bool unsafe_large = false;
  /// When set, every entry of the count cache there is recomputed.
  std::optional<std::string> cache_dir;
};

struct CheckResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool pass() const;
  std::size_t check_count() const;
  std::size_t failure_count() const;
  /// Byte-stable for fixed options: no timings, fixed ordering.
  std::string to_json() const;
  /// One line per suite plus one per failed check.
  std::string summary() const;
};

/// crt, lifting, lemma4, lemma7, recurrence, omega-partition, theorem-a,
/// theorem-b, frieze-render (the order "all" runs them in).
const std::vector<std::string>& suite_names();

/// Throws Error(kInvalidParams) for an unknown suite or out-of-bounds ranges.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace frieze

#endif  // FRIEZE_VERIFY_HPP
