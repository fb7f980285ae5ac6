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

#ifndef FRIEZE_FAREYGRAPH_HPP
#define FRIEZE_FAREYGRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frieze/modring.hpp"

namespace frieze {

/// A vertex a/b of E_n: a pair of residues mod n with gcd(a, b, n) = 1.
/// Ordering is lexicographic on (modulus, a, b), which within one graph is
/// the canonical vertex order.
class Vertex {
 public:
  /// Reduces a and b mod n. Throws Error(kInvalidArgument) when
  /// gcd(a, b, n) != 1 and Error(kInvalidModulus) when n < 2.
  Vertex(Int a, Int b, Int n);

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int modulus() const noexcept { return n_; }

  /// "a/b"
  std::string label() const;

  friend auto operator<=>(const Vertex& x, const Vertex& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }
  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  Int n_;
  Int a_;
  Int b_;
};

/// An element (a b; c d) of SL2(Z/nZ), acting by x/y -> (ax+by)/(cx+dy).
class Mat2 {
 public:
  /// Throws Error(kInvalidArgument) unless ad - bc = 1 mod n.
  Mat2(Int a, Int b, Int c, Int d, Int n);

  static Mat2 identity(Int n) { return Mat2(1, 0, 0, 1, n); }

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int c() const noexcept { return c_; }
  Int d() const noexcept { return d_; }
  Int modulus() const noexcept { return n_; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  Int n_;
  Int a_, b_, c_, d_;
};

struct DirectedEdge {
  Vertex from;
  Vertex to;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// The Farey graph E_n, fully materialized. Immutable after construction.
class FareyGraph {
 public:
  using Index = std::uint32_t;

  /// Throws Error(kInvalidModulus) for n < 2.
  explicit FareyGraph(Int n);

  Int modulus() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& vertex(Index i) const { return vertices_.at(i); }

  std::optional<Index> find(const Vertex& v) const;
  /// Throws Error(kVertexNotInGraph).
  Index index_of(const Vertex& v) const;

  /// Successors / predecessors of vertex i, in canonical vertex order.
  std::span<const Index> out_neighbors(Index i) const { return out_[i]; }
  std::span<const Index> in_neighbors(Index i) const { return in_[i]; }

  /// Every directed edge, ordered by (from, to).
  std::vector<DirectedEdge> edges() const;

 private:
  Int n_;
  std::vector<Vertex> vertices_;
  std::vector<std::int32_t> slot_;  // a*n + b -> vertex index or -1
  std::vector<std::vector<Index>> out_;
  std::vector<std::vector<Index>> in_;
  std::size_t edge_count_ = 0;
};

/// Number of vertices of E_n, n^2 * prod_{p|n} (1 - p^-2), from the
/// factorization alone.
Int farey_vertex_count(Int n);

/// Order of SL2(Z/nZ), n^3 * prod_{p|n} (1 - p^-2).
Int sl2_order(Int n);

/// True iff u.a * v.b - u.b * v.a = 1 mod n. Throws Error(kModulusMismatch).
bool is_edge(const Vertex& u, const Vertex& v);

/// u.a * v.b - u.b * v.a reduced mod n.
Int det(const Vertex& u, const Vertex& v);

Vertex apply_matrix(const Mat2& A, const Vertex& v);

/// The unique A in SL2(Z/nZ) with A(e1.from) = e2.from and A(e1.to) = e2.to.
Mat2 edge_transporter(const DirectedEdge& e1, const DirectedEdge& e2);

/// Componentwise reduction to a divisor m >= 2 of the modulus.
/// Throws Error(kNotADivisor).
Vertex reduce(const Vertex& v, Int m);
Mat2 reduce(const Mat2& A, Int m);

/// The p^2 vertices of E_{p^r} reducing to v in E_{p^(r-1)}, in canonical
/// order. Requires r >= 2 and v.modulus() == p^(r-1).
std::vector<Vertex> vertex_lifts(const Vertex& v, Int p, unsigned r);

/// The tensor product G (x) H of two directed graphs. Vertex (i, j) has index
/// i * right_size + j.
struct TensorGraph {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::vector<std::size_t>> out;

  std::size_t vertex_count() const { return out.size(); }
  std::size_t edge_count() const;
  std::size_t index(std::size_t i, std::size_t j) const {
    return i * right_size + j;
  }
};

TensorGraph tensor_product(const FareyGraph& G, const FareyGraph& H);

/// alpha: E_mn -> E_m (x) E_n, a/b -> (a mod m / b mod m, a mod n / b mod n).
/// Throws Error(kModuliNotCoprime).
std::pair<Vertex, Vertex> crt_iso_alpha(const Vertex& v, Int m, Int n);

/// beta: the inverse of alpha, by CRT on each coordinate.
Vertex crt_iso_beta(const Vertex& left, const Vertex& right);

/// True iff u = lambda * v for some unit lambda.
bool equivalent(const Vertex& u, const Vertex& v);

Vertex negate(const Vertex& v);

}  // namespace frieze

#endif  // FRIEZE_FAREYGRAPH_HPP
