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

#include "frieze/fareygraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "frieze/error.hpp"

namespace frieze {

namespace {

Int mulmod(Int a, Int b, Int n) {
  return static_cast<Int>(static_cast<__int128>(a) * b % n);
}

void require_same_modulus(Int x, Int y) {
  if (x != y) {
    throw Error(ErrorCode::kModulusMismatch,
                "mod " + std::to_string(x) + " vs mod " + std::to_string(y));
  }
}

void require_divisor(Int n, Int m) {
  if (m < 2 || n % m != 0) {
    throw Error(ErrorCode::kNotADivisor,
                std::to_string(m) + " is not a divisor >= 2 of " +
                    std::to_string(n));
  }
}

}  // namespace

Vertex::Vertex(Int a, Int b, Int n) : n_(n), a_(0), b_(0) {
  if (n < 2) throw Error(ErrorCode::kInvalidModulus, "vertex modulus must be >= 2");
  a_ = mod(a, n);
  b_ = mod(b, n);
  if (gcd3(a_, b_, n_) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                label() + " is not a vertex of E_" + std::to_string(n));
  }
}

std::string Vertex::label() const {
  return std::to_string(a_) + "/" + std::to_string(b_);
}

Mat2::Mat2(Int a, Int b, Int c, Int d, Int n)
    : n_(n), a_(mod(a, n)), b_(mod(b, n)), c_(mod(c, n)), d_(mod(d, n)) {
  if (n < 2) throw Error(ErrorCode::kInvalidModulus, "matrix modulus must be >= 2");
  if (mod(mulmod(a_, d_, n) - mulmod(b_, c_, n), n) != 1 % n) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not in SL2");
  }
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  require_same_modulus(x.n_, y.n_);
  const Int n = x.n_;
  return Mat2(mulmod(x.a_, y.a_, n) + mulmod(x.b_, y.c_, n),
              mulmod(x.a_, y.b_, n) + mulmod(x.b_, y.d_, n),
              mulmod(x.c_, y.a_, n) + mulmod(x.d_, y.c_, n),
              mulmod(x.c_, y.b_, n) + mulmod(x.d_, y.d_, n), n);
}

FareyGraph::FareyGraph(Int n) : n_(n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidModulus,
                "E_n needs n >= 2, got " + std::to_string(n));
  }
  slot_.assign(static_cast<std::size_t>(n * n), -1);
  for (Int a = 0; a < n; ++a) {
    for (Int b = 0; b < n; ++b) {
      if (gcd3(a, b, n) != 1) continue;
      slot_[static_cast<std::size_t>(a * n + b)] =
          static_cast<std::int32_t>(vertices_.size());
      vertices_.emplace_back(a, b, n);
    }
  }
  const std::size_t count = vertices_.size();
  out_.resize(count);
  in_.resize(count);
  for (Index i = 0; i < count; ++i) {
    const Vertex& u = vertices_[i];
    for (Index j = 0; j < count; ++j) {
      const Vertex& v = vertices_[j];
      if (mod(mulmod(u.a(), v.b(), n) - mulmod(u.b(), v.a(), n), n) == 1) {
        out_[i].push_back(j);
        in_[j].push_back(i);
        ++edge_count_;
      }
    }
  }
}

std::optional<FareyGraph::Index> FareyGraph::find(const Vertex& v) const {
  if (v.modulus() != n_) return std::nullopt;
  const std::int32_t s = slot_[static_cast<std::size_t>(v.a() * n_ + v.b())];
  if (s < 0) return std::nullopt;
  return static_cast<Index>(s);
}

FareyGraph::Index FareyGraph::index_of(const Vertex& v) const {
  if (auto i = find(v)) return *i;
  throw Error(ErrorCode::kVertexNotInGraph,
              v.label() + " (mod " + std::to_string(v.modulus()) +
                  ") is not a vertex of E_" + std::to_string(n_));
}

std::vector<DirectedEdge> FareyGraph::edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(edge_count_);
  for (Index i = 0; i < vertices_.size(); ++i) {
    for (Index j : out_[i]) out.push_back({vertices_[i], vertices_[j]});
  }
  return out;
}

Int farey_vertex_count(Int n) {
  // n^2 prod (1 - p^-2) = prod p^(2r-2) (p^2 - 1)
  Int out = 1;
  for (const PrimePower& pp : factorize(n)) {
    out *= ipow(pp.p, 2 * pp.r - 2) * (pp.p * pp.p - 1);
  }
  return out;
}

Int sl2_order(Int n) { return n * farey_vertex_count(n); }

Int det(const Vertex& u, const Vertex& v) {
  require_same_modulus(u.modulus(), v.modulus());
  const Int n = u.modulus();
  return mod(mulmod(u.a(), v.b(), n) - mulmod(u.b(), v.a(), n), n);
}

bool is_edge(const Vertex& u, const Vertex& v) { return det(u, v) == 1; }

Vertex apply_matrix(const Mat2& A, const Vertex& v) {
  require_same_modulus(A.modulus(), v.modulus());
  const Int n = v.modulus();
  return Vertex(mulmod(A.a(), v.a(), n) + mulmod(A.b(), v.b(), n),
                mulmod(A.c(), v.a(), n) + mulmod(A.d(), v.b(), n), n);
}

Mat2 edge_transporter(const DirectedEdge& e1, const DirectedEdge& e2) {
  const Int n = e1.from.modulus();
  require_same_modulus(n, e2.from.modulus());
  if (!is_edge(e1.from, e1.to) || !is_edge(e2.from, e2.to)) {
    throw Error(ErrorCode::kInvalidArgument, "edge_transporter needs two edges");
  }
  // With M1 = [u1 v1] and M2 = [u2 v2] as column matrices (both in SL2),
  // the transporter is M2 * M1^-1.
  const Vertex& u1 = e1.from;
  const Vertex& v1 = e1.to;
  const Vertex& u2 = e2.from;
  const Vertex& v2 = e2.to;
  const Mat2 m1_inv(v1.b(), -v1.a(), -u1.b(), u1.a(), n);
  const Mat2 m2(u2.a(), v2.a(), u2.b(), v2.b(), n);
  const Mat2 A = m2 * m1_inv;
  if (apply_matrix(A, u1) != u2 || apply_matrix(A, v1) != v2) {
    throw Error(ErrorCode::kNoTransporter, "transporter failed to map the edge");
  }
  return A;
}

Vertex reduce(const Vertex& v, Int m) {
  require_divisor(v.modulus(), m);
  return Vertex(v.a() % m, v.b() % m, m);
}

Mat2 reduce(const Mat2& A, Int m) {
  require_divisor(A.modulus(), m);
  return Mat2(A.a() % m, A.b() % m, A.c() % m, A.d() % m, m);
}

std::vector<Vertex> vertex_lifts(const Vertex& v, Int p, unsigned r) {
  if (r < 2 || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "vertex_lifts needs prime p and r >= 2");
  }
  const Int step = ipow(p, r - 1);
  require_same_modulus(v.modulus(), step);
  const Int n = step * p;
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p * p));
  for (Int i = 0; i < p; ++i) {
    for (Int j = 0; j < p; ++j) {
      out.emplace_back(v.a() + i * step, v.b() + j * step, n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t TensorGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : out) total += row.size();
  return total;
}

TensorGraph tensor_product(const FareyGraph& G, const FareyGraph& H) {
  TensorGraph T;
  T.left_size = G.vertex_count();
  T.right_size = H.vertex_count();
  T.out.resize(T.left_size * T.right_size);
  for (FareyGraph::Index i = 0; i < T.left_size; ++i) {
    for (FareyGraph::Index j = 0; j < T.right_size; ++j) {
      auto& row = T.out[T.index(i, j)];
      for (FareyGraph::Index i2 : G.out_neighbors(i)) {
        for (FareyGraph::Index j2 : H.out_neighbors(j)) {
          row.push_back(T.index(i2, j2));
        }
      }
    }
  }
  return T;
}

std::pair<Vertex, Vertex> crt_iso_alpha(const Vertex& v, Int m, Int n) {
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorCode::kModuliNotCoprime,
                std::to_string(m) + " and " + std::to_string(n) + " are not coprime");
  }
  require_same_modulus(v.modulus(), m * n);
  return {reduce(v, m), reduce(v, n)};
}

Vertex crt_iso_beta(const Vertex& left, const Vertex& right) {
  const Int m = left.modulus();
  const Int n = right.modulus();
  const Residue a = crt_combine(Residue(left.a(), m), Residue(right.a(), n));
  const Residue b = crt_combine(Residue(left.b(), m), Residue(right.b(), n));
  return Vertex(a.value(), b.value(), m * n);
}

bool equivalent(const Vertex& u, const Vertex& v) {
  require_same_modulus(u.modulus(), v.modulus());
  const Int n = u.modulus();
  for (const Residue& lambda : units(n)) {
    if (mulmod(lambda.value(), v.a(), n) == u.a() &&
        mulmod(lambda.value(), v.b(), n) == u.b()) {
      return true;
    }
  }
  return false;
}

Vertex negate(const Vertex& v) { return Vertex(-v.a(), -v.b(), v.modulus()); }

}  // namespace frieze
