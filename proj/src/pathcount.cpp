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

#include "frieze/pathcount.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace frieze {

namespace {

using Index = FareyGraph::Index;

Int sign_power(unsigned i) { return i % 2 == 0 ? 1 : -1; }

void require_prime(Int p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidParams, std::to_string(p) + " is not prime");
  }
}

// Number of walks of each length j = 0..m from every vertex to `target`.
std::vector<std::vector<BigNat>> walks_to(const FareyGraph& G, Index target,
                                          unsigned m) {
  std::vector<std::vector<BigNat>> layers(m + 1,
                                          std::vector<BigNat>(G.vertex_count()));
  layers[0][target] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    const auto& prev = layers[j - 1];
    auto& cur = layers[j];
    for (Index x = 0; x < G.vertex_count(); ++x) {
      for (Index w : G.out_neighbors(x)) {
        if (prev[w] != 0) cur[x] += prev[w];
      }
    }
  }
  return layers;
}

bool same_reduction(const Vertex& big, const Vertex& small) {
  const Int s = small.modulus();
  return big.a() % s == small.a() && big.b() % s == small.b();
}

}  // namespace

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a path needs at least one edge");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i].modulus() != vertices_[i + 1].modulus() ||
        !is_edge(vertices_[i], vertices_[i + 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  vertices_[i].label() + " -> " + vertices_[i + 1].label() +
                      " is not an edge");
    }
  }
}

std::string Path::label() const {
  std::string out = "<";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += ", ";
    out += vertices_[i].label();
  }
  return out + ">";
}

Path reduce(const Path& path, Int m) {
  std::vector<Vertex> out;
  out.reserve(path.vertices().size());
  for (const Vertex& v : path.vertices()) out.push_back(reduce(v, m));
  return Path(std::move(out));
}

LimitExceeded::LimitExceeded(std::size_t partial_count, std::size_t limit)
    : Error(ErrorCode::kLimitExceeded,
            "more than " + std::to_string(limit) + " paths"),
      partial_count_(partial_count) {}

BigNat count_paths(const FareyGraph& G, const Vertex& u, const Vertex& v,
                   unsigned m) {
  const Index from = G.index_of(u);
  const Index to = G.index_of(v);
  return walk_distribution(G, from, m)[to];
}

std::vector<BigNat> walk_distribution(const FareyGraph& G, Index start,
                                      unsigned m) {
  std::vector<BigNat> cur(G.vertex_count());
  std::vector<BigNat> next(G.vertex_count());
  cur.at(start) = 1;
  for (unsigned step = 0; step < m; ++step) {
    for (auto& x : next) x = 0;
    for (Index x = 0; x < G.vertex_count(); ++x) {
      if (cur[x] == 0) continue;
      for (Index w : G.out_neighbors(x)) next[w] += cur[x];
    }
    std::swap(cur, next);
  }
  return cur;
}

std::vector<Path> enumerate_paths(const FareyGraph& G, const Vertex& u,
                                  const Vertex& v, unsigned m,
                                  std::size_t limit) {
  if (m < 1) throw Error(ErrorCode::kInvalidParams, "enumerate_paths needs m >= 1");
  const Index from = G.index_of(u);
  const Index to = G.index_of(v);

  // reach[j][x]: some walk of length j leads from x to v.
  std::vector<std::vector<std::uint8_t>> reach(
      m + 1, std::vector<std::uint8_t>(G.vertex_count(), 0));
  reach[0][to] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    for (Index x = 0; x < G.vertex_count(); ++x) {
      for (Index w : G.out_neighbors(x)) {
        if (reach[j - 1][w]) {
          reach[j][x] = 1;
          break;
        }
      }
    }
  }

  std::vector<Path> out;
  if (!reach[m][from]) return out;
  std::vector<Index> stack{from};
  std::function<void()> dfs = [&] {
    const unsigned remaining = m - static_cast<unsigned>(stack.size() - 1);
    if (remaining == 0) {
      if (out.size() == limit) throw LimitExceeded(out.size(), limit);
      std::vector<Vertex> verts;
      verts.reserve(stack.size());
      for (Index i : stack) verts.push_back(G.vertex(i));
      out.emplace_back(std::move(verts));
      return;
    }
    for (Index w : G.out_neighbors(stack.back())) {
      if (!reach[remaining - 1][w]) continue;
      stack.push_back(w);
      dfs();
      stack.pop_back();
    }
  };
  dfs();
  return out;
}

Path unrank_path(const FareyGraph& G, const Vertex& u, const Vertex& v,
                 unsigned m, const BigNat& index) {
  if (m < 1) throw Error(ErrorCode::kInvalidParams, "unrank_path needs m >= 1");
  const Index from = G.index_of(u);
  const auto layers = walks_to(G, G.index_of(v), m);
  if (index < 0 || index >= layers[m][from]) {
    throw Error(ErrorCode::kOutOfRange,
                "index " + to_decimal(index) + " but only " +
                    to_decimal(layers[m][from]) + " walks");
  }
  BigNat rest = index;
  std::vector<Vertex> verts{G.vertex(from)};
  Index x = from;
  for (unsigned j = m; j > 0; --j) {
    for (Index w : G.out_neighbors(x)) {
      const BigNat& c = layers[j - 1][w];
      if (rest < c) {
        x = w;
        break;
      }
      rest -= c;
    }
    verts.push_back(G.vertex(x));
  }
  return Path(std::move(verts));
}

std::vector<BigNat> masked_distribution(const FareyGraph& G, Index start,
                                        const TransferMask& mask) {
  if (mask.allowed.empty()) {
    throw Error(ErrorCode::kInvalidParams, "empty transfer mask");
  }
  for (const auto& s : mask.allowed) {
    if (s.size() != G.vertex_count() ||
        std::none_of(s.begin(), s.end(), [](std::uint8_t b) { return b != 0; })) {
      throw Error(ErrorCode::kInvalidParams, "malformed transfer mask");
    }
  }
  std::vector<BigNat> cur(G.vertex_count());
  std::vector<BigNat> next(G.vertex_count());
  if (mask.allowed[0].at(start)) cur[start] = 1;
  for (std::size_t step = 1; step < mask.allowed.size(); ++step) {
    const auto& allowed = mask.allowed[step];
    for (auto& x : next) x = 0;
    for (Index x = 0; x < G.vertex_count(); ++x) {
      if (cur[x] == 0) continue;
      for (Index w : G.out_neighbors(x)) {
        if (allowed[w]) next[w] += cur[x];
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kX: return "X";
    case Family::kY: return "Y";
    case Family::kOmega: return "OMEGA";
    case Family::kZ: return "Z";
    case Family::kZt: return "Z_T";
    case Family::kW: return "W";
  }
  return "?";
}

const char* method_name(CountMethod m) {
  switch (m) {
    case CountMethod::kFormula: return "formula";
    case CountMethod::kTransferMatrix: return "transfer_matrix";
    case CountMethod::kDfs: return "dfs";
  }
  return "?";
}

void PathFamilyQuery::validate() const {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorCode::kInvalidParams,
                std::string(family_name(family)) + ": " + why);
  };
  switch (family) {
    case Family::kX:
      if (n < 2) fail("n must be >= 2");
      if (m < 2) fail("m must be >= 2");
      return;
    case Family::kY:
      if (n < 2) fail("n must be >= 2");
      if (m < 1) fail("m must be >= 1");
      return;
    case Family::kOmega:
    case Family::kZ:
    case Family::kZt:
    case Family::kW:
      if (!is_prime(p)) fail("p must be prime");
      if (m < 2 || m % 2 != 0) fail("length must be even and >= 2");
      if (family != Family::kOmega && r < 1) fail("r must be >= 1");
      if (family == Family::kZt && (t < 1 || t >= r)) fail("need 1 <= t < r");
      if (family == Family::kW && (p != 2 || k() % 2 != 0)) {
        fail("needs p = 2 and k even");
      }
      return;
  }
}

namespace {

// Lifts of every alternating path of E_p into E_{p^r}, starting at 1/0.
std::vector<Path> omega_lifts(const FareyGraph& G, Int p, unsigned k) {
  std::vector<Path> out;
  const Anchor anchor{AnchorEnd::kInitial, Vertex(1, 0, G.modulus())};
  for (const Path& omega : enumerate_Omega(p, k)) {
    auto lifts = lift_paths(G, omega, anchor);
    out.insert(out.end(), std::make_move_iterator(lifts.begin()),
               std::make_move_iterator(lifts.end()));
  }
  return out;
}

bool z_t_final(const Vertex& v, Int p, Int eps, unsigned t) {
  const Int n = v.modulus();
  const Int a = mod(v.a() - eps, n);
  const Int b = v.b();
  if (a % p != 0 || b % p != 0) return false;
  const unsigned tb = valuation(b, p);
  return tb == t && valuation(a, p) >= tb;
}

BigNat count_by_dfs(const PathFamilyQuery& q) {
  switch (q.family) {
    case Family::kX:
      return BigNat(enumerate_X(FareyGraph(q.n), q.m).size());
    case Family::kY:
      return BigNat(enumerate_Y(FareyGraph(q.n), q.m).size());
    case Family::kOmega:
      return BigNat(enumerate_Omega(q.p, q.k()).size());
    case Family::kZ:
    case Family::kZt:
    case Family::kW: {
      const FareyGraph G(ipow(q.p, q.r));
      const Int eps = sign_power(q.k());
      std::size_t total = 0;
      if (q.family == Family::kW && q.r == 1) return 0;
      for (const Path& lift : omega_lifts(G, q.p, q.k())) {
        const Vertex& last = lift.back();
        if (q.family == Family::kZ) {
          total += last == Vertex(eps, 0, G.modulus());
        } else if (q.family == Family::kW) {
          total += last == Vertex(-1, 0, G.modulus());
        } else {
          total += z_t_final(last, q.p, eps, q.t);
        }
      }
      return BigNat(total);
    }
  }
  return 0;
}

BigNat count_by_transfer(const PathFamilyQuery& q) {
  switch (q.family) {
    case Family::kX:
      return count_X(q.n, q.m);
    case Family::kY:
      return count_Y(q.n, q.m);
    case Family::kOmega:
      return pow_nat(static_cast<unsigned long>(q.p), q.k());
    case Family::kZ:
      return count_Z(q.p, q.r, q.k());
    case Family::kZt:
      return count_Z_t(q.p, q.r, q.k(), q.t);
    case Family::kW:
      return count_W(q.r, q.k());
  }
  return 0;
}

}  // namespace

CountReport count_family(const PathFamilyQuery& query, CountMethod method) {
  query.validate();
  const auto started = std::chrono::steady_clock::now();
  CountReport report;
  report.query = query;
  report.method = method;
  switch (method) {
    case CountMethod::kTransferMatrix:
      report.count = count_by_transfer(query);
      break;
    case CountMethod::kDfs:
      report.count = count_by_dfs(query);
      break;
    case CountMethod::kFormula:
      throw Error(ErrorCode::kInvalidParams,
                  "path families are counted by transfer matrix or DFS");
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

BigNat count_X(const FareyGraph& G, unsigned m) {
  if (m < 2) throw Error(ErrorCode::kInvalidParams, "X_m needs m >= 2");
  const Int n = G.modulus();
  const auto dist = walk_distribution(G, G.index_of(Vertex(0, 1, n)), m - 1);
  BigNat total = 0;
  for (const Residue& lambda : units(n)) {
    total += dist[G.index_of(Vertex(lambda.value(), 0, n))];
  }
  return total;
}

BigNat count_X(Int n, unsigned m) {
  if (n < 2) throw Error(ErrorCode::kInvalidParams, "X_m(n) needs n >= 2");
  return count_X(FareyGraph(n), m);
}

std::vector<Path> enumerate_X(const FareyGraph& G, unsigned m,
                              std::size_t limit) {
  if (m < 2) throw Error(ErrorCode::kInvalidParams, "X_m needs m >= 2");
  const Int n = G.modulus();
  const Vertex start(1, 0, n);
  const Vertex second(0, 1, n);
  std::vector<Path> out;
  for (const Residue& lambda : units(n)) {
    const Vertex end(lambda.value(), 0, n);
    for (const Path& tail : enumerate_paths(G, second, end, m - 1, limit)) {
      std::vector<Vertex> verts{start};
      verts.insert(verts.end(), tail.vertices().begin(), tail.vertices().end());
      out.emplace_back(std::move(verts));
    }
    if (out.size() > limit) throw LimitExceeded(limit, limit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigNat count_Y(const FareyGraph& G, unsigned m) {
  if (m < 1) throw Error(ErrorCode::kInvalidParams, "Y_m needs m >= 1");
  const Vertex start(1, 0, G.modulus());
  return count_paths(G, start, negate(start), m);
}

BigNat count_Y(Int n, unsigned m) {
  if (n < 2) throw Error(ErrorCode::kInvalidParams, "Y_m(n) needs n >= 2");
  return count_Y(FareyGraph(n), m);
}

std::vector<Path> enumerate_Y(const FareyGraph& G, unsigned m,
                              std::size_t limit) {
  const Vertex start(1, 0, G.modulus());
  return enumerate_paths(G, start, negate(start), m, limit);
}

std::vector<Path> lift_paths(const FareyGraph& target, const Path& gamma,
                             const Anchor& anchor) {
  const Int small = gamma.modulus();
  const Int big = target.modulus();
  if (big % small != 0) {
    throw Error(ErrorCode::kNotADivisor,
                std::to_string(small) + " does not divide " + std::to_string(big));
  }
  const bool forward = anchor.end == AnchorEnd::kInitial;
  const Vertex& endpoint = forward ? gamma.front() : gamma.back();
  if (anchor.vertex.modulus() != big || !same_reduction(anchor.vertex, endpoint)) {
    throw Error(ErrorCode::kBadAnchor,
                anchor.vertex.label() + " does not lift " + endpoint.label());
  }

  // Walk gamma from the anchored end, following edges (or reversed edges)
  // into the fiber of the next vertex.
  const std::size_t m = gamma.length();
  auto target_at = [&](std::size_t step) -> const Vertex& {
    return forward ? gamma[step] : gamma[m - step];
  };
  std::vector<Path> out;
  std::vector<Index> stack{target.index_of(anchor.vertex)};
  std::function<void()> dfs = [&] {
    const std::size_t depth = stack.size() - 1;
    if (depth == m) {
      std::vector<Vertex> verts;
      verts.reserve(stack.size());
      for (Index i : stack) verts.push_back(target.vertex(i));
      if (!forward) std::reverse(verts.begin(), verts.end());
      out.emplace_back(std::move(verts));
      return;
    }
    const Vertex& want = target_at(depth + 1);
    const auto next = forward ? target.out_neighbors(stack.back())
                              : target.in_neighbors(stack.back());
    for (Index w : next) {
      if (!same_reduction(target.vertex(w), want)) continue;
      stack.push_back(w);
      dfs();
      stack.pop_back();
    }
  };
  dfs();
  std::sort(out.begin(), out.end());
  return out;
}

Vertex middle_vertex(const Vertex& u, const Vertex& w) {
  if (u.modulus() != w.modulus()) {
    throw Error(ErrorCode::kModulusMismatch, "middle_vertex needs one graph");
  }
  const Int n = u.modulus();
  const auto pp = as_prime_power(n);
  if (!pp) {
    throw Error(ErrorCode::kPreconditionViolated,
                "middle_vertex needs a prime-power modulus");
  }
  const Int p = pp->p;
  const Int a = u.a(), b = u.b(), c = w.a(), d = w.b();
  if (b % p == 0 || c % p == 0 || (a % p != 0 && d % p != 0)) {
    throw Error(ErrorCode::kPreconditionViolated,
                u.label() + " -> * -> " + w.label() +
                    " needs b, c nonzero and a or d zero mod " + std::to_string(p));
  }
  const Residue mu = inverse(Residue(a, n) * Residue(d, n) - Residue(b, n) * Residue(c, n));
  const Vertex v((mu * Residue(a + c, n)).value(), (mu * Residue(b + d, n)).value(), n);
  if (!is_edge(u, v) || !is_edge(v, w)) {
    throw Error(ErrorCode::kNoTransporter, "middle vertex is not on a path");
  }
  return v;
}

bool has_liftable_subpath(const Path& path, Int p) {
  const auto verts = path.vertices();
  for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
    const Int a = verts[i].a() % p, b = verts[i].b() % p;
    const Int c = verts[i + 2].a() % p, d = verts[i + 2].b() % p;
    if (b != 0 && c != 0 && (a == 0 || d == 0)) return true;
  }
  return false;
}

bool has_terminal_subpath(const Path& path, Int p) {
  const auto verts = path.vertices();
  for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
    if (verts[i].b() % p == 0) continue;
    const Int mid_b = verts[i + 1].b() % p;
    const Int end_a = verts[i + 2].a() % p;
    const Int end_b = verts[i + 2].b() % p;
    if (end_b != 0) continue;
    if ((mid_b == 1 % p && end_a == mod(-1, p)) ||
        (mid_b == mod(-1, p) && end_a == 1 % p)) {
      return true;
    }
  }
  return false;
}

bool is_omega_path(const Path& path) {
  const Int p = path.modulus();
  if (path.length() % 2 != 0) return false;
  for (std::size_t j = 0; j < path.vertices().size(); ++j) {
    const Int sign = mod(sign_power(static_cast<unsigned>(j / 2)), p);
    const Vertex& v = path[j];
    if (j % 2 == 0 ? (v.a() != sign || v.b() != 0) : v.b() != sign) return false;
  }
  return true;
}

std::vector<Path> enumerate_Omega(Int p, unsigned k) {
  require_prime(p);
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "Omega needs k >= 1");
  std::vector<Path> out;
  std::vector<Int> lambdas(k, 0);
  while (true) {
    std::vector<Vertex> verts;
    verts.reserve(2 * k + 1);
    for (unsigned i = 0; i < k; ++i) {
      verts.emplace_back(sign_power(i), 0, p);
      verts.emplace_back(lambdas[i], sign_power(i), p);
    }
    verts.emplace_back(sign_power(k), 0, p);
    out.emplace_back(std::move(verts));
    // Odometer over (lambda_1, ..., lambda_k), last digit fastest.
    unsigned pos = k;
    while (pos > 0 && ++lambdas[pos - 1] == p) lambdas[--pos] = 0;
    if (pos == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TransferMask omega_lift_mask(const FareyGraph& G, Int p, unsigned k) {
  require_prime(p);
  if (!as_prime_power(G.modulus()) || as_prime_power(G.modulus())->p != p) {
    throw Error(ErrorCode::kInvalidParams, "graph modulus is not a power of p");
  }
  TransferMask mask;
  mask.allowed.assign(2 * k + 1, std::vector<std::uint8_t>(G.vertex_count(), 0));
  for (unsigned j = 0; j <= 2 * k; ++j) {
    const Int sign = mod(sign_power(j / 2), p);
    for (Index i = 0; i < G.vertex_count(); ++i) {
      const Vertex& v = G.vertex(i);
      const bool ok = j % 2 == 0 ? (v.a() % p == sign && v.b() % p == 0)
                                 : v.b() % p == sign;
      mask.allowed[j][i] = ok;
    }
  }
  return mask;
}

namespace {

std::vector<BigNat> omega_distribution(const FareyGraph& G, Int p, unsigned k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "k must be >= 1");
  return masked_distribution(G, G.index_of(Vertex(1, 0, G.modulus())),
                             omega_lift_mask(G, p, k));
}

}  // namespace

BigNat count_Z(const FareyGraph& G, Int p, unsigned k) {
  const auto dist = omega_distribution(G, p, k);
  return dist[G.index_of(Vertex(sign_power(k), 0, G.modulus()))];
}

BigNat count_Z(Int p, unsigned r, unsigned k) {
  require_prime(p);
  if (r < 1) throw Error(ErrorCode::kInvalidParams, "r must be >= 1");
  return count_Z(FareyGraph(ipow(p, r)), p, k);
}

BigNat count_Z_t(const FareyGraph& G, Int p, unsigned k, unsigned t) {
  const auto pp = as_prime_power(G.modulus());
  if (!pp || pp->p != p || t < 1 || t >= pp->r) {
    throw Error(ErrorCode::kInvalidParams, "Z_k(r, t) needs 1 <= t < r");
  }
  const auto dist = omega_distribution(G, p, k);
  const Int eps = sign_power(k);
  BigNat total = 0;
  for (Index i = 0; i < G.vertex_count(); ++i) {
    if (dist[i] != 0 && z_t_final(G.vertex(i), p, eps, t)) total += dist[i];
  }
  return total;
}

BigNat count_Z_t(Int p, unsigned r, unsigned k, unsigned t) {
  require_prime(p);
  if (t < 1 || t >= r) {
    throw Error(ErrorCode::kInvalidParams, "Z_k(r, t) needs 1 <= t < r");
  }
  return count_Z_t(FareyGraph(ipow(p, r)), p, k, t);
}

BigNat count_W(unsigned r, unsigned k) {
  if (k < 1 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParams, "W_k(r) needs k even");
  }
  if (r < 1) throw Error(ErrorCode::kInvalidParams, "r must be >= 1");
  if (r == 1) return 0;
  const FareyGraph G(ipow(2, r));
  const auto dist = omega_distribution(G, 2, k);
  return dist[G.index_of(Vertex(-1, 0, G.modulus()))];
}

AuxMatrix aux_graph_matrix() {
  const int w[4][4] = {{0, 4, 2, 2}, {4, 0, 2, 2}, {2, 2, 0, 4}, {2, 2, 4, 0}};
  AuxMatrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = w[i][j];
  }
  return out;
}

BigNat aux_graph_count(unsigned k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "aux_graph_count needs k >= 1");
  const AuxMatrix base = aux_graph_matrix();
  AuxMatrix power = base;
  for (unsigned step = 1; step < k; ++step) {
    AuxMatrix next;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        BigNat s = 0;
        for (int l = 0; l < 4; ++l) s += power[i][l] * base[l][j];
        next[i][j] = s;
      }
    }
    power = next;
  }
  return power[0][1];
}

}  // namespace frieze
