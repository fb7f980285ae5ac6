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

// Brute-force reference implementations for the unit tests. They work on raw
// (a, b) pairs and never call into the library, so agreement with it is
// evidence rather than tautology.

#ifndef FRIEZE_TESTS_ORACLES_HPP
#define FRIEZE_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::int64_t, std::int64_t>;

inline std::int64_t md(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

inline std::vector<Pair> vertices(std::int64_t n) {
  std::vector<Pair> out;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (std::gcd(std::gcd(a, b), n) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

inline bool edge(const Pair& u, const Pair& v, std::int64_t n) {
  return md(u.first * v.second - u.second * v.first, n) == 1;
}

inline bool is_unit(std::int64_t a, std::int64_t n) { return std::gcd(md(a, n), n) == 1; }

inline std::int64_t totient(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1;
  return count;
}

/// Walks of length m from `start`, visiting every one and reporting the
/// vertex sequence to `visit`. Plain DFS over pair adjacency.
inline void walks(std::int64_t n, const Pair& start, unsigned m,
                  const std::function<void(const std::vector<Pair>&)>& visit) {
  const auto vs = vertices(n);
  std::vector<Pair> seq{start};
  std::function<void()> rec = [&] {
    if (seq.size() == m + 1) {
      visit(seq);
      return;
    }
    for (const Pair& v : vs) {
      if (edge(seq.back(), v, n)) {
        seq.push_back(v);
        rec();
        seq.pop_back();
      }
    }
  };
  rec();
}

/// |X_m(n)|: 1/0 -> 0/1 -> ... -> lambda/0.
inline std::uint64_t count_X(std::int64_t n, unsigned m) {
  std::uint64_t count = 0;
  walks(n, {1, 0}, m, [&](const std::vector<Pair>& s) {
    count += s[1] == Pair{0, 1} && s.back().second == 0 && is_unit(s.back().first, n);
  });
  return count;
}

/// |Y_m(n)|: 1/0 -> ... -> -1/0.
inline std::uint64_t count_Y(std::int64_t n, unsigned m) {
  std::uint64_t count = 0;
  walks(n, {1, 0}, m, [&](const std::vector<Pair>& s) {
    count += s.back() == Pair{md(-1, n), 0};
  });
  return count;
}

/// Lifts to Z/p^rZ of the alternating paths of length 2k mod p that start at
/// 1/0, filtered by `accept` on the end vertex.
inline std::uint64_t count_alternating_lifts(std::int64_t p, std::int64_t pr, unsigned k,
                                             const std::function<bool(const Pair&)>& accept) {
  std::uint64_t count = 0;
  walks(pr, {1, 0}, 2 * k, [&](const std::vector<Pair>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::int64_t sign = (i / 2) % 2 == 0 ? 1 : -1;
      const Pair r{md(s[i].first, p), md(s[i].second, p)};
      if (i % 2 == 0 && r != Pair{md(sign, p), 0}) return;
      if (i % 2 == 1 && r.second != md(sign, p)) return;
    }
    count += accept(s.back());
  });
  return count;
}

inline unsigned val(std::int64_t a, std::int64_t p) {
  if (a == 0) return 1000;
  unsigned v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

}  // namespace oracle

#endif  // FRIEZE_TESTS_ORACLES_HPP
