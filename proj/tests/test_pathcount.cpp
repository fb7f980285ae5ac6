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

#include <set>

#include "frieze/pathcount.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

std::vector<Vertex> seq(Int n, std::initializer_list<std::pair<Int, Int>> pairs) {
  std::vector<Vertex> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b, n);
  return out;
}

}  // namespace

TEST_CASE("paths validate their edges") {
  const Path p(seq(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}}));
  CHECK(p.length() == 3);
  CHECK(p.label() == "<1/0, 0/1, 1/1, 1/0>");
  CHECK(code_of([] { Path(seq(5, {{1, 0}})); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Path(seq(5, {{0, 1}, {1, 0}, {0, 1}})); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("walk counts against pair-level DFS") {
  for (Int n = 2; n <= 6; ++n) {
    const FareyGraph G(n);
    const auto vs = oracle::vertices(n);
    for (unsigned m = 1; m <= 4; ++m) {
      for (std::size_t t = 0; t < vs.size(); t += 3) {
        std::uint64_t brute = 0;
        oracle::walks(n, {1, 0}, m, [&](const auto& s) { brute += s.back() == vs[t]; });
        CHECK(count_paths(G, Vertex(1, 0, n), Vertex(vs[t].first, vs[t].second, n), m) == brute);
      }
    }
  }
}

TEST_CASE("walk distribution sums to n^m") {
  const FareyGraph G(6);
  const auto dist = walk_distribution(G, 0, 4);
  BigNat total = 0;
  for (const auto& c : dist) total += c;
  CHECK(total == 6 * 6 * 6 * 6);
}

TEST_CASE("enumeration is sorted, valid and matches the count") {
  for (Int n : {3, 4, 6}) {
    const FareyGraph G(n);
    const Vertex u(1, 0, n), v(n - 1, 0, n);
    for (unsigned m = 1; m <= 5; ++m) {
      const auto paths = enumerate_paths(G, u, v, m);
      CHECK(BigNat(paths.size()) == count_paths(G, u, v, m));
      CHECK(std::is_sorted(paths.begin(), paths.end()));
      CHECK(std::set<Path>(paths.begin(), paths.end()).size() == paths.size());
      for (std::size_t i = 0; i < paths.size(); ++i) {
        CHECK(paths[i].front() == u);
        CHECK(paths[i].back() == v);
        CHECK(unrank_path(G, u, v, m, i) == paths[i]);
      }
      CHECK(code_of([&] { unrank_path(G, u, v, m, paths.size()); }) == ErrorCode::kOutOfRange);
    }
  }
}

TEST_CASE("enumeration respects its limit") {
  const FareyGraph G(5);
  try {
    enumerate_paths(G, Vertex(1, 0, 5), Vertex(4, 0, 5), 6, 10);
    FAIL("no limit error");
  } catch (const LimitExceeded& e) {
    CHECK(e.code() == ErrorCode::kLimitExceeded);
    CHECK(e.partial_count() == 10);
  }
}

TEST_CASE("X and Y counts against brute force") {
  for (Int n = 2; n <= 7; ++n) {
    const FareyGraph G(n);
    for (unsigned m = 1; m <= 5; ++m) {
      if (m >= 2) CHECK(count_X(G, m) == oracle::count_X(n, m));
      CHECK(count_Y(G, m) == oracle::count_Y(n, m));
      CHECK(count_Y(n, m) == count_Y(G, m));
    }
  }
}

TEST_CASE("X_3 over Z/2Z has exactly one path") {
  const auto xs = enumerate_X(FareyGraph(2), 3);
  REQUIRE(xs.size() == 1);
  CHECK(xs.front().label() == "<1/0, 0/1, 1/1, 1/0>");
}

TEST_CASE("Y_4 over Z/2Z has six paths") {
  const auto ys = enumerate_Y(FareyGraph(2), 4);
  CHECK(ys.size() == 6);
  for (const Path& y : ys) CHECK(y.back() == Vertex(1, 0, 2));
}

TEST_CASE("masked distribution with nothing masked is the walk distribution") {
  const FareyGraph G(4);
  TransferMask mask;
  mask.allowed.assign(4, std::vector<std::uint8_t>(G.vertex_count(), 1));
  CHECK(masked_distribution(G, 2, mask) == walk_distribution(G, 2, 3));
  TransferMask bad;
  CHECK(code_of([&] { masked_distribution(G, 0, bad); }) == ErrorCode::kInvalidParams);
}

TEST_CASE("lifting a path multiplies by p^((r-s)m)") {
  const FareyGraph E3(3), E9(9), E27(27);
  const Path gamma(seq(3, {{1, 0}, {0, 1}, {2, 1}, {1, 1}}));
  const auto lifts = lift_paths(E9, gamma, {AnchorEnd::kInitial, Vertex(4, 3, 9)});
  CHECK(lifts.size() == 27);
  for (const Path& l : lifts) {
    CHECK(reduce(l, 3) == gamma);
    CHECK(l.front() == Vertex(4, 3, 9));
  }
  CHECK(lift_paths(E27, gamma, {AnchorEnd::kFinal, Vertex(1, 4, 27)}).size() == 729);
  CHECK(code_of([&] { lift_paths(E9, gamma, {AnchorEnd::kInitial, Vertex(0, 1, 9)}); }) ==
        ErrorCode::kBadAnchor);
}

TEST_CASE("middle vertex") {
  const FareyGraph G(9);
  const Vertex u(3, 1, 9), w(1, 5, 9);
  const Vertex v = middle_vertex(u, w);
  CHECK(is_edge(u, v));
  CHECK(is_edge(v, w));
  CHECK(code_of([] { middle_vertex(Vertex(1, 1, 4), Vertex(0, 1, 4)); }) ==
        ErrorCode::kPreconditionViolated);
  // Outside the precondition the middle can still be unique; 1/1 -> * -> 0/1
  // in E_4 goes through 1/2 only.
  const FareyGraph E4(4);
  std::vector<Vertex> middles;
  for (const Vertex& x : E4.vertices()) {
    if (is_edge(Vertex(1, 1, 4), x) && is_edge(x, Vertex(0, 1, 4))) middles.push_back(x);
  }
  CHECK(middles == std::vector<Vertex>{Vertex(1, 2, 4)});
}

TEST_CASE("alternating paths") {
  for (Int p : {2, 3, 5}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto omegas = enumerate_Omega(p, k);
      CHECK(BigNat(omegas.size()) == pow_nat(static_cast<unsigned long>(p), k));
      for (const Path& w : omegas) {
        CHECK(is_omega_path(w));
        CHECK_FALSE(has_terminal_subpath(w, p));
        CHECK(w.back() == Vertex(k % 2 == 0 ? 1 : -1, 0, p));
      }
    }
  }
}

TEST_CASE("liftable windows do occur inside alternating paths") {
  // 1/0 -> 0/1 -> -1/0 -> 1/-1 -> ... : the window 0/1 -> -1/0 -> 1/-1 has
  // b = 1, c = 1 nonzero and a = 0.
  const auto omegas = enumerate_Omega(2, 3);
  std::size_t liftable = 0;
  for (const Path& w : omegas) liftable += has_liftable_subpath(w, 2);
  CHECK(liftable == 4);
}

TEST_CASE("semiclosed paths split into alternating and terminal ones") {
  // Alternating paths of length 2k end at (-1)^k/0, so for odd p they are
  // semiclosed only when k is odd.
  for (auto [p, m] : {std::pair<Int, unsigned>{2, 6}, {3, 6}, {2, 4}, {5, 2}, {5, 6}}) {
    std::size_t omega = 0, terminal = 0;
    const auto ys = enumerate_Y(FareyGraph(p), m);
    for (const Path& y : ys) {
      const bool a = is_omega_path(y), b = has_terminal_subpath(y, p);
      CHECK(a != b);
      omega += a;
      terminal += b;
    }
    CHECK(omega == enumerate_Omega(p, m / 2).size());
    CHECK(omega + terminal == ys.size());
  }
  for (const Path& y : enumerate_Y(FareyGraph(5), 4)) CHECK(has_terminal_subpath(y, 5));
}

TEST_CASE("Z counts against lifting by brute force") {
  for (auto [p, r] : {std::pair<Int, unsigned>{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const Int pr = ipow(p, r);
    for (unsigned k = 1; k <= (pr <= 4 ? 3U : 2U); ++k) {
      const Int eps = k % 2 == 0 ? 1 : -1;
      const auto z = oracle::count_alternating_lifts(p, pr, k, [&](const oracle::Pair& e) {
        return e == oracle::Pair{oracle::md(eps, pr), 0};
      });
      CHECK(count_Z(p, r, k) == z);
      for (unsigned t = 1; t < r; ++t) {
        const auto zt = oracle::count_alternating_lifts(p, pr, k, [&](const oracle::Pair& e) {
          const std::int64_t a = oracle::md(e.first - eps, pr);
          return e.second != 0 && oracle::val(e.second, p) == t && oracle::val(a, p) >= t;
        });
        CHECK(count_Z_t(p, r, k, t) == zt);
      }
    }
  }
  CHECK(count_Z(5, 1, 2) == 25);
}

TEST_CASE("W counts") {
  CHECK(count_W(1, 2) == 0);
  for (unsigned r : {2U, 3U}) {
    for (unsigned k : {2U, 4U}) {
      const Int pr = ipow(2, r);
      const auto w = oracle::count_alternating_lifts(
          2, pr, k, [&](const oracle::Pair& e) { return e == oracle::Pair{pr - 1, 0}; });
      CHECK(count_W(r, k) == w);
    }
  }
  CHECK(code_of([] { count_W(2, 3); }) == ErrorCode::kInvalidParams);
}

TEST_CASE("auxiliary four-vertex graph") {
  const AuxMatrix aux = aux_graph_matrix();
  const int expected[4][4] = {{0, 4, 2, 2}, {4, 0, 2, 2}, {2, 2, 0, 4}, {2, 2, 4, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(aux[i][j] == expected[i][j]);
  CHECK(aux_graph_count(1) == 4);
  CHECK(aux_graph_count(2) == 8);
  CHECK(aux_graph_count(4) == 896);
}

TEST_CASE("family queries") {
  CHECK(count_family({Family::kX, 5, 0, 0, 6, 0}).count == count_X(5, 6));
  CHECK(count_family({Family::kOmega, 0, 3, 1, 4, 0}).count == 9);
  CHECK(count_family({Family::kZ, 0, 2, 2, 4, 0}, CountMethod::kDfs).count == count_Z(2, 2, 2));
  CHECK(code_of([] { count_family({Family::kZ, 0, 4, 1, 4, 0}); }) == ErrorCode::kInvalidParams);
  CHECK(code_of([] { count_family({Family::kZt, 0, 2, 2, 4, 2}); }) == ErrorCode::kInvalidParams);
  CHECK(code_of([] { count_family({Family::kX, 5, 0, 0, 6, 0}, CountMethod::kFormula); }) ==
        ErrorCode::kInvalidParams);
  CHECK(std::string(family_name(Family::kZt)) == "Z_T");
}
