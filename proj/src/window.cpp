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

#include "frieze/window.hpp"

#include <string>
#include <utility>

#include "frieze/error.hpp"

namespace frieze {

namespace {

Int mulmod(Int a, Int b, Int n) {
  return static_cast<Int>(static_cast<__int128>(a) * b % n);
}

Int det3(const std::vector<Int>& e, Int n) {
  auto minor = [&](int x, int y, int z, int w) {
    return mod(mulmod(e[x], e[w], n) - mulmod(e[y], e[z], n), n);
  };
  Int total = mulmod(e[0], minor(4, 5, 7, 8), n);
  total -= mulmod(e[1], minor(3, 5, 6, 8), n);
  total += mulmod(e[2], minor(3, 4, 6, 7), n);
  return mod(total, n);
}

}  // namespace

FriezeWindow::FriezeWindow(Int n, unsigned m, std::size_t period,
                           std::vector<std::vector<Int>> rows)
    : n_(n), m_(m), period_(period), rows_(std::move(rows)) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "frieze modulus must be >= 2");
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "frieze width must be >= 1");
  if (period < 1) throw Error(ErrorCode::kInvalidArgument, "period must be >= 1");
  if (rows_.size() != m + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(m + 1) + " rows, got " +
                    std::to_string(rows_.size()));
  }
  for (auto& row : rows_) {
    if (row.size() != period) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row has " + std::to_string(row.size()) + " entries, period is " +
                      std::to_string(period));
    }
    for (Int& x : row) x = mod(x, n);
  }
}

Int FriezeWindow::at(unsigned d, long i) const {
  const long p = static_cast<long>(period_);
  return rows_.at(d)[static_cast<std::size_t>(((i % p) + p) % p)];
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kDiamond: return "DIAMOND";
    case Rule::kTame: return "TAME";
    case Rule::kBoundary: return "BOUNDARY";
  }
  return "?";
}

std::vector<RuleViolation> check_boundary(const FriezeWindow& w) {
  std::vector<RuleViolation> out;
  for (unsigned d : {0U, w.width()}) {
    for (std::size_t i = 0; i < w.period(); ++i) {
      const Int x = w.rows()[d][i];
      if (x != 0) out.push_back({Rule::kBoundary, d, i, {x}, x});
    }
  }
  return out;
}

std::vector<RuleViolation> check_diamond(const FriezeWindow& w) {
  std::vector<RuleViolation> out;
  const Int n = w.modulus();
  for (unsigned d = 1; d < w.width(); ++d) {
    for (std::size_t col = 0; col < w.period(); ++col) {
      const long i = static_cast<long>(col);
      const Int a = w.at(d, i);
      const Int dd = w.at(d, i + 1);
      const Int b = w.at(d - 1, i + 1);
      const Int c = w.at(d + 1, i);
      const Int value = mod(mulmod(a, dd, n) - mulmod(b, c, n), n);
      if (value != 1) out.push_back({Rule::kDiamond, d, col, {a, b, c, dd}, value});
    }
  }
  return out;
}

std::vector<RuleViolation> check_tame(const FriezeWindow& w) {
  std::vector<RuleViolation> out;
  const Int n = w.modulus();
  for (unsigned d = 2; d + 2 <= w.width(); ++d) {
    for (std::size_t col = 0; col < w.period(); ++col) {
      const long i = static_cast<long>(col);
      std::vector<Int> e;
      e.reserve(9);
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) e.push_back(w.at(d + k - j, i + j - 1));
      }
      const Int value = det3(e, n);
      if (value != 0) out.push_back({Rule::kTame, d, col, std::move(e), value});
    }
  }
  return out;
}

bool is_regular(const FriezeWindow& w) {
  if (w.width() < 2) return false;
  for (unsigned d : {1U, w.width() - 1}) {
    for (Int x : w.rows()[d]) {
      if (x != 1) return false;
    }
  }
  return true;
}

FriezeWindow render_from_path(const Path& gamma, unsigned periods) {
  const unsigned m = static_cast<unsigned>(gamma.length());
  if (m < 2) throw Error(ErrorCode::kInvalidParams, "rendering needs width >= 2");
  if (periods < 1) throw Error(ErrorCode::kInvalidParams, "periods must be >= 1");
  if (gamma.back() != negate(gamma.front())) {
    throw Error(ErrorCode::kNotSemiclosed,
                gamma.label() + " does not end at the negation of its start");
  }
  const std::size_t period = 2 * static_cast<std::size_t>(m) * periods;
  std::vector<Vertex> seq(gamma.vertices().begin(), gamma.vertices().end());
  while (seq.size() < period + m) seq.push_back(negate(seq[seq.size() - m]));
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    if (!is_edge(seq[j], seq[j + 1])) {
      throw Error(ErrorCode::kNotSemiclosed, "continued sequence left the graph");
    }
  }
  std::vector<std::vector<Int>> rows(m + 1, std::vector<Int>(period));
  for (unsigned d = 0; d <= m; ++d) {
    for (std::size_t i = 0; i < period; ++i) rows[d][i] = det(seq[i], seq[i + d]);
  }
  return FriezeWindow(gamma.modulus(), m, period, std::move(rows));
}

FriezeWindow fig1_fixture() {
  return FriezeWindow(5, 6, 4,
                      {{0, 0, 0, 0},
                       {1, 1, 1, 1},
                       {2, 4, 3, 1},
                       {2, 1, 2, 1},
                       {4, 2, 1, 3},
                       {2, 3, 2, 3},
                       {0, 0, 0, 0}});
}

}  // namespace frieze
