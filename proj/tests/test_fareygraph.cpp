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

#include <map>
#include <random>
#include <set>

#include "frieze/fareygraph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frieze;

namespace {

std::vector<Mat2> all_sl2(Int n) {
  std::vector<Mat2> out;
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < n; ++b)
      for (Int c = 0; c < n; ++c)
        for (Int d = 0; d < n; ++d)
          if (oracle::md(a * d - b * c, n) == 1) out.emplace_back(a, b, c, d, n);
  return out;
}

}  // namespace

TEST_CASE("vertices are reduced and validated") {
  const Vertex v(-1, 7, 5);
  CHECK(v.a() == 4);
  CHECK(v.b() == 2);
  CHECK(v.label() == "4/2");
  CHECK(code_of([] { Vertex(2, 4, 8); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Vertex(1, 0, 1); }) == ErrorCode::kInvalidModulus);
  CHECK_NOTHROW(Vertex(2, 3, 6));
}

TEST_CASE("vertex and edge counts against a scan") {
  for (Int n = 2; n <= 40; ++n) {
    const FareyGraph G(n);
    const auto scan = oracle::vertices(n);
    REQUIRE(G.vertex_count() == scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
      CHECK(G.vertex(static_cast<FareyGraph::Index>(i)) == Vertex(scan[i].first, scan[i].second, n));
    }
    CHECK(static_cast<Int>(G.vertex_count()) == farey_vertex_count(n));
    CHECK(static_cast<Int>(G.edge_count()) == sl2_order(n));
    CHECK(G.edge_count() == G.vertex_count() * static_cast<std::size_t>(n));
  }
}

TEST_CASE("every vertex has in- and out-degree n") {
  for (Int n : {2, 6, 9, 12}) {
    const FareyGraph G(n);
    for (FareyGraph::Index i = 0; i < G.vertex_count(); ++i) {
      CHECK(G.out_neighbors(i).size() == static_cast<std::size_t>(n));
      CHECK(G.in_neighbors(i).size() == static_cast<std::size_t>(n));
      for (auto j : G.out_neighbors(i)) CHECK(is_edge(G.vertex(i), G.vertex(j)));
    }
  }
}

TEST_CASE("E_2 is the triangle with both orientations") {
  const FareyGraph G(2);
  CHECK(G.vertex_count() == 3);
  CHECK(G.edge_count() == 6);
  const auto edges = G.edges();
  CHECK(edges.front() == DirectedEdge{Vertex(0, 1, 2), Vertex(1, 0, 2)});
}

TEST_CASE("edge lookup") {
  const FareyGraph G(5);
  CHECK(G.find(Vertex(3, 4, 5)).has_value());
  CHECK(code_of([&] { G.index_of(Vertex(1, 0, 7)); }) == ErrorCode::kVertexNotInGraph);
  CHECK(is_edge(Vertex(1, 0, 5), Vertex(0, 1, 5)));
  CHECK_FALSE(is_edge(Vertex(0, 1, 5), Vertex(1, 0, 5)));
  CHECK(det(Vertex(0, 1, 5), Vertex(1, 0, 5)) == 4);
  CHECK(code_of([] { is_edge(Vertex(1, 0, 5), Vertex(0, 1, 7)); }) == ErrorCode::kModulusMismatch);
}

TEST_CASE("SL2 matrices") {
  CHECK(code_of([] { Mat2(1, 1, 1, 1, 5); }) == ErrorCode::kInvalidArgument);
  const Mat2 A(2, 1, 1, 1, 7), B(1, 3, 0, 1, 7);
  const Mat2 AB = A * B;
  CHECK(AB == Mat2(2, 0, 1, 4, 7));
  const Vertex v(3, 5, 7);
  CHECK(apply_matrix(AB, v) == apply_matrix(A, apply_matrix(B, v)));
  CHECK(all_sl2(3).size() == 24);
  CHECK(static_cast<Int>(all_sl2(4).size()) == sl2_order(4));
}

TEST_CASE("the transporter sending 1/0 -> 0/1 to 0/1 -> 4/1 mod 5") {
  const DirectedEdge e1{Vertex(1, 0, 5), Vertex(0, 1, 5)};
  const DirectedEdge e2{Vertex(0, 1, 5), Vertex(4, 1, 5)};
  // Worked by hand: the columns are the images of 1/0 and 0/1.
  CHECK(edge_transporter(e1, e2) == Mat2(0, -1, 1, 1, 5));
}

TEST_CASE("SL2 acts simply transitively on edges") {
  for (Int n : {3, 4}) {
    const FareyGraph G(n);
    const auto group = all_sl2(n);
    const auto edges = G.edges();
    for (const auto& e1 : edges) {
      for (const auto& e2 : edges) {
        std::vector<Mat2> hits;
        for (const Mat2& A : group) {
          if (apply_matrix(A, e1.from) == e2.from && apply_matrix(A, e1.to) == e2.to) {
            hits.push_back(A);
          }
        }
        REQUIRE(hits.size() == 1);
        CHECK(edge_transporter(e1, e2) == hits.front());
      }
    }
  }
  CHECK(code_of([] {
          edge_transporter({Vertex(1, 0, 5), Vertex(1, 0, 5)}, {Vertex(1, 0, 5), Vertex(0, 1, 5)});
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("matrices preserve edges") {
  std::mt19937_64 gen(7);
  for (Int n = 2; n <= 12; ++n) {
    const FareyGraph G(n);
    const auto group = all_sl2(n <= 6 ? n : 2);
    const auto edges = G.edges();
    for (int t = 0; t < 100; ++t) {
      const auto& e = edges[gen() % edges.size()];
      const Mat2 A = n <= 6 ? group[gen() % group.size()]
                            : edge_transporter(edges[gen() % edges.size()], e);
      CHECK(is_edge(apply_matrix(A, e.from), apply_matrix(A, e.to)));
    }
  }
}

TEST_CASE("reduction to a divisor") {
  CHECK(reduce(Vertex(7, 4, 12), 6) == Vertex(1, 4, 6));
  CHECK(reduce(Mat2(5, 2, 2, 1, 12), 4) == Mat2(1, 2, 2, 1, 4));
  CHECK(code_of([] { reduce(Vertex(1, 0, 12), 5); }) == ErrorCode::kNotADivisor);
  const FareyGraph G(12);
  for (const auto& e : G.edges()) {
    for (Int m : {2, 3, 4, 6}) CHECK(is_edge(reduce(e.from, m), reduce(e.to, m)));
  }
}

TEST_CASE("vertex lifts are the fibres of reduction") {
  for (auto [p, r] : {std::pair<Int, unsigned>{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    const FareyGraph big(ipow(p, r)), small(ipow(p, r - 1));
    std::map<Vertex, std::vector<Vertex>> fibres;
    for (const Vertex& v : big.vertices()) fibres[reduce(v, small.modulus())].push_back(v);
    for (const Vertex& v : small.vertices()) {
      const auto lifts = vertex_lifts(v, p, r);
      CHECK(lifts.size() == static_cast<std::size_t>(p * p));
      CHECK(lifts == fibres[v]);
    }
  }
  CHECK(code_of([] { vertex_lifts(Vertex(1, 0, 4), 4, 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("tensor product and the CRT isomorphism") {
  for (auto [m, n] : {std::pair<Int, Int>{2, 3}, {3, 4}, {4, 5}}) {
    const FareyGraph Gm(m), Gn(n), Gmn(m * n);
    const TensorGraph T = tensor_product(Gm, Gn);
    CHECK(T.vertex_count() == Gm.vertex_count() * Gn.vertex_count());
    CHECK(T.edge_count() == Gm.edge_count() * Gn.edge_count());
    CHECK(T.edge_count() == Gmn.edge_count());
    std::set<std::pair<Vertex, Vertex>> images;
    for (const Vertex& v : Gmn.vertices()) {
      const auto [l, r] = crt_iso_alpha(v, m, n);
      CHECK(l == Vertex(v.a(), v.b(), m));
      CHECK(r == Vertex(v.a(), v.b(), n));
      CHECK(crt_iso_beta(l, r) == v);
      images.emplace(l, r);
    }
    CHECK(images.size() == T.vertex_count());
    for (const auto& e : Gmn.edges()) {
      const auto a = crt_iso_alpha(e.from, m, n);
      const auto b = crt_iso_alpha(e.to, m, n);
      CHECK(is_edge(a.first, b.first));
      CHECK(is_edge(a.second, b.second));
    }
  }
  CHECK(code_of([] { crt_iso_alpha(Vertex(1, 0, 12), 2, 6); }) == ErrorCode::kModuliNotCoprime);
}

TEST_CASE("unit equivalence and negation") {
  CHECK(equivalent(Vertex(2, 0, 5), Vertex(1, 0, 5)));
  CHECK(equivalent(Vertex(2, 4, 9), Vertex(1, 2, 9)));
  CHECK_FALSE(equivalent(Vertex(1, 1, 5), Vertex(1, 2, 5)));
  CHECK(negate(Vertex(1, 0, 5)) == Vertex(4, 0, 5));
  CHECK(negate(Vertex(1, 0, 2)) == Vertex(1, 0, 2));
}
