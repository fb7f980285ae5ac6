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

#ifndef FRIEZE_WINDOW_HPP
#define FRIEZE_WINDOW_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frieze/modring.hpp"
#include "frieze/pathcount.hpp"

namespace frieze {

/// A horizontally periodic window onto a width-m frieze over Z/nZ.
///
/// Row d (0..m) column i holds E(d, i); columns wrap with the declared
/// period. Rows are staggered so that row d, column i sits at horizontal
/// position 2i + d: the diamond with left entry E(d, i) has right entry
/// E(d, i+1), top E(d-1, i+1) and bottom E(d+1, i).
class FriezeWindow {
 public:
  /// Entries are reduced mod n. Throws Error(kInvalidArgument) unless there
  /// are m + 1 rows of exactly `period` entries, n >= 2, m >= 1, period >= 1.
  FriezeWindow(Int n, unsigned m, std::size_t period,
               std::vector<std::vector<Int>> rows);

  Int modulus() const noexcept { return n_; }
  unsigned width() const noexcept { return m_; }
  std::size_t period() const noexcept { return period_; }
  const std::vector<std::vector<Int>>& rows() const noexcept { return rows_; }

  /// E(d, i) with i taken modulo the period.
  Int at(unsigned d, long i) const;

  friend bool operator==(const FriezeWindow&, const FriezeWindow&) = default;

 private:
  Int n_;
  unsigned m_;
  std::size_t period_;
  std::vector<std::vector<Int>> rows_;
};

enum class Rule { kDiamond, kTame, kBoundary };

const char* rule_name(Rule rule);

struct RuleViolation {
  Rule rule;
  unsigned row;
  std::size_t column;
  /// DIAMOND: (a, b, c, d) as in the picture b over a|d over c.
  /// TAME: the 3x3 matrix row-major. BOUNDARY: the offending entry.
  std::vector<Int> entries;
  /// Determinant of `entries` mod n (the entry itself for BOUNDARY).
  Int value;
};

/// Nonzero entries on rows 0 and m.
std::vector<RuleViolation> check_boundary(const FriezeWindow& w);

/// Every diamond with a = E(d,i), d = E(d,i+1), b = E(d-1,i+1),
/// c = E(d+1,i), 1 <= d <= m-1, where ad - bc != 1 mod n.
std::vector<RuleViolation> check_diamond(const FriezeWindow& w);

/// Every nine-entry diamond M[j][k] = E(d+k-j, i+j-1), 2 <= d <= m-2, whose
/// determinant is nonzero mod n. Independent of check_diamond.
std::vector<RuleViolation> check_tame(const FriezeWindow& w);

/// Rows 1 and m-1 are identically 1.
bool is_regular(const FriezeWindow& w);

/// Renders the regular frieze of a semiclosed path (v_m = -v_0): the vertex
/// sequence is continued by v_{j+m} = -v_j and E(d, i) = det(v_i, v_{i+d}).
/// The window period is 2m * periods. Throws Error(kNotSemiclosed).
FriezeWindow render_from_path(const Path& gamma, unsigned periods = 1);

/// The tame frieze over Z/5Z of width 6 with period 4 used as golden data.
FriezeWindow fig1_fixture();

}  // namespace frieze

#endif  // FRIEZE_WINDOW_HPP
