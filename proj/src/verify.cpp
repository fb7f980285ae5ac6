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

#include "frieze/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "frieze/error.hpp"
#include "frieze/fareygraph.hpp"
#include "frieze/formulas.hpp"
#include "frieze/pathcount.hpp"
#include "frieze/serialize.hpp"
#include "frieze/service.hpp"
#include "frieze/window.hpp"
#include "rng.hpp"

namespace frieze {

using nlohmann::json;

namespace {

using Index = FareyGraph::Index;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void equal(const std::string& name, const std::string& params,
             const std::string& expected, const std::string& actual) {
    result_.checks.push_back({name, params, expected, actual, expected == actual});
  }
  void equal(const std::string& name, const std::string& params,
             const BigNat& expected, const BigNat& actual) {
    equal(name, params, to_decimal(expected), to_decimal(actual));
  }
  /// Records "failures: 0" style checks for exhaustive scans.
  void scan(const std::string& name, const std::string& params,
            std::size_t cases, std::size_t failures) {
    result_.checks.push_back({name, params + " cases=" + std::to_string(cases),
                              "0 failures", std::to_string(failures) + " failures",
                              failures == 0 && cases > 0});
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string kv(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

Int lift_bound(const VerifyOptions& o) {
  return o.unsafe_large ? std::numeric_limits<Int>::max() : kMaxLiftModulus;
}

Mat2 random_sl2(Rng& rng, Int n) {
  while (true) {
    const auto draw = [&] { return static_cast<Int>(rng.below(static_cast<std::uint64_t>(n))); };
    const Int a = draw(), b = draw(), c = draw(), d = draw();
    if (mod(a * d - b * c, n) == 1) return Mat2(a, b, c, d, n);
  }
}

const Vertex& random_vertex(Rng& rng, const FareyGraph& G) {
  return G.vertex(static_cast<Index>(rng.below(G.vertex_count())));
}

std::vector<std::pair<Vertex, Vertex>> tensor_pairs(const FareyGraph& G, const FareyGraph& H) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Vertex& u : G.vertices()) {
    for (const Vertex& v : H.vertices()) out.emplace_back(u, v);
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult suite_crt(const VerifyOptions& o) {
  Suite s("crt");
  Rng rng(o.seed ^ 0x11);

  {
    std::size_t cases = 0, bad = 0;
    for (Int m = 1; m <= 200; ++m) {
      for (Int n = 1; m * n <= 200; ++n) {
        if (std::gcd(m, n) != 1) continue;
        ++cases;
        bad += totient(m * n) != totient(m) * totient(n);
      }
    }
    s.scan("totient-multiplicative", "mn<=200", cases, bad);
  }
  {
    std::size_t cases = 0, bad = 0;
    for (Int m = 2; m <= 12; ++m) {
      for (Int n = 2; m * n <= 60; ++n) {
        if (std::gcd(m, n) != 1) continue;
        ++cases;
        std::set<Int> seen;
        for (Int x = 0; x < m; ++x) {
          for (Int y = 0; y < n; ++y) {
            const Residue z = crt_combine(Residue(x, m), Residue(y, n));
            if (z.value() % m != x || z.value() % n != y) ++bad;
            seen.insert(z.value());
          }
        }
        bad += static_cast<Int>(seen.size()) != m * n;
      }
    }
    s.scan("crt-combine-bijection", "mn<=60", cases, bad);
  }

  const Int structure_max = std::min<Int>(30, o.unsafe_large ? 30 : kMaxCountModulus);
  for (Int n = 2; n <= structure_max; ++n) {
    const FareyGraph G(n);
    std::size_t scan_count = 0;
    for (Int a = 0; a < n; ++a) {
      for (Int b = 0; b < n; ++b) scan_count += gcd3(a, b, n) == 1;
    }
    std::size_t bad = 0;
    for (Index i = 0; i < G.vertex_count(); ++i) {
      bad += G.out_neighbors(i).size() != static_cast<std::size_t>(n);
      bad += G.in_neighbors(i).size() != static_cast<std::size_t>(n);
    }
    bad += G.vertex_count() != scan_count;
    bad += static_cast<Int>(G.vertex_count()) != farey_vertex_count(n);
    bad += static_cast<Int>(G.edge_count()) != sl2_order(n);
    s.scan("graph-structure", kv({{"n", n}}), G.vertex_count(), bad);
  }

  {
    // Every SL2(Z/3Z) element, then for each ordered pair of edges count the
    // matrices carrying one to the other.
    const Int n = 3;
    const FareyGraph G(n);
    std::vector<Mat2> group;
    for (Int a = 0; a < n; ++a)
      for (Int b = 0; b < n; ++b)
        for (Int c = 0; c < n; ++c)
          for (Int d = 0; d < n; ++d)
            if (mod(a * d - b * c, n) == 1) group.emplace_back(a, b, c, d, n);
    const auto edges = G.edges();
    std::size_t cases = 0, bad = 0;
    for (const DirectedEdge& e1 : edges) {
      for (const DirectedEdge& e2 : edges) {
        ++cases;
        std::size_t hits = 0;
        for (const Mat2& A : group) {
          hits += apply_matrix(A, e1.from) == e2.from && apply_matrix(A, e1.to) == e2.to;
        }
        const Mat2 T = edge_transporter(e1, e2);
        bad += hits != 1 || apply_matrix(T, e1.from) != e2.from ||
               apply_matrix(T, e1.to) != e2.to;
      }
    }
    s.equal("sl2-order", "n=3", "24", std::to_string(group.size()));
    s.scan("sl2-simply-transitive", "n=3", cases, bad);
  }

  for (Int n = 2; n <= 12; ++n) {
    const FareyGraph G(n);
    const auto edges = G.edges();
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Mat2 A = random_sl2(rng, n);
      const DirectedEdge& e = edges[rng.below(edges.size())];
      bad += !is_edge(apply_matrix(A, e.from), apply_matrix(A, e.to));
    }
    s.scan("sl2-preserves-edges", kv({{"n", n}}), 200, bad);
  }

  const std::pair<Int, Int> crt_pairs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  for (const auto& [m, n] : crt_pairs) {
    const FareyGraph Gm(m), Gn(n), Gmn(m * n);
    const TensorGraph T = tensor_product(Gm, Gn);
    std::size_t vertex_bad = 0;
    std::vector<std::size_t> alpha(Gmn.vertex_count());
    std::vector<int> hit(T.vertex_count(), 0);
    for (Index i = 0; i < Gmn.vertex_count(); ++i) {
      const Vertex& v = Gmn.vertex(i);
      const auto [left, right] = crt_iso_alpha(v, m, n);
      alpha[i] = T.index(Gm.index_of(left), Gn.index_of(right));
      ++hit[alpha[i]];
      vertex_bad += crt_iso_beta(left, right) != v;
    }
    for (const auto& [left, right] : tensor_pairs(Gm, Gn)) {
      const auto back = crt_iso_alpha(crt_iso_beta(left, right), m, n);
      vertex_bad += back.first != left || back.second != right;
    }
    vertex_bad += std::count_if(hit.begin(), hit.end(), [](int h) { return h != 1; });
    s.scan("crt-vertex-bijection", kv({{"m", m}, {"n", n}}), Gmn.vertex_count(), vertex_bad);

    // Edge relation preserved in both directions on every ordered pair.
    std::vector<std::vector<std::uint8_t>> tensor_adj(T.vertex_count());
    for (std::size_t x = 0; x < T.vertex_count(); ++x) {
      tensor_adj[x].assign(T.vertex_count(), 0);
      for (std::size_t y : T.out[x]) tensor_adj[x][y] = 1;
    }
    std::size_t edge_bad = 0, cases = 0;
    for (Index i = 0; i < Gmn.vertex_count(); ++i) {
      for (Index j = 0; j < Gmn.vertex_count(); ++j) {
        ++cases;
        const bool e = is_edge(Gmn.vertex(i), Gmn.vertex(j));
        edge_bad += e != static_cast<bool>(tensor_adj[alpha[i]][alpha[j]]);
      }
    }
    edge_bad += T.edge_count() != Gmn.edge_count();
    s.scan("crt-edge-bijection", kv({{"m", m}, {"n", n}}), cases, edge_bad);
    s.equal("tensor-edge-count", kv({{"m", m}, {"n", n}}),
            std::to_string(Gmn.edge_count()), std::to_string(T.edge_count()));
  }

  const Int mult_max = std::min<Int>(30, o.unsafe_large ? 30 : kMaxCountModulus);
  for (Int n1 = 2; n1 * n1 < mult_max; ++n1) {
    for (Int n2 = n1 + 1; n1 * n2 <= mult_max; ++n2) {
      if (std::gcd(n1, n2) != 1) continue;
      const FareyGraph G1(n1), G2(n2), G12(n1 * n2);
      std::size_t bad = 0, cases = 0;
      for (unsigned m = 1; m <= 6; ++m) {
        ++cases;
        bad += count_Y(G12, m) != count_Y(G1, m) * count_Y(G2, m);
        if (m < 2) continue;
        ++cases;
        bad += count_X(G12, m) * totient(n1 * n2) !=
               count_X(G1, m) * totient(n1) * count_X(G2, m) * totient(n2);
      }
      s.scan("path-count-multiplicative", kv({{"n1", n1}, {"n2", n2}}), cases, bad);
    }
  }
  return s.take();
}

// ---------------------------------------------------------------------------

Path random_walk(Rng& rng, const FareyGraph& G, unsigned length) {
  std::vector<Vertex> verts;
  Index x = static_cast<Index>(rng.below(G.vertex_count()));
  verts.push_back(G.vertex(x));
  for (unsigned i = 0; i < length; ++i) {
    const auto next = G.out_neighbors(x);
    x = next[rng.below(next.size())];
    verts.push_back(G.vertex(x));
  }
  return Path(std::move(verts));
}

SuiteResult suite_lifting(const VerifyOptions& o) {
  Suite s("lifting");
  Rng rng(o.seed ^ 0x22);
  const Int bound = lift_bound(o);

  for (Int p : o.primes) {
    for (unsigned r = 2; r <= o.r_max && ipow(p, r) <= bound; ++r) {
      const Int N = ipow(p, r), M = ipow(p, r - 1);
      const FareyGraph big(N);
      const FareyGraph small(M);
      std::map<Vertex, std::vector<Vertex>> fibers;
      for (const Vertex& v : big.vertices()) fibers[reduce(v, M)].push_back(v);
      std::size_t bad = 0;
      for (const Vertex& v : small.vertices()) {
        const auto lifts = vertex_lifts(v, p, r);
        bad += lifts.size() != static_cast<std::size_t>(p * p) || lifts != fibers[v];
      }
      bad += fibers.size() != small.vertex_count();
      s.scan("vertex-lifts", kv({{"p", p}, {"r", r}}), small.vertex_count(), bad);

      std::size_t hom_bad = 0;
      for (const DirectedEdge& e : big.edges()) {
        hom_bad += !is_edge(reduce(e.from, M), reduce(e.to, M));
      }
      s.scan("reduce-homomorphism", kv({{"p", p}, {"r", r}}), big.edge_count(), hom_bad);

      std::size_t eq_bad = 0;
      for (int trial = 0; trial < 200; ++trial) {
        const Mat2 A = random_sl2(rng, N);
        const Vertex& v = random_vertex(rng, big);
        eq_bad += reduce(apply_matrix(A, v), M) != apply_matrix(reduce(A, M), reduce(v, M));
      }
      s.scan("reduce-equivariance", kv({{"p", p}, {"r", r}}), 200, eq_bad);
    }
  }

  // Path lifting from E_{p^s} to E_{p^r} with either endpoint fixed.
  for (Int p : o.primes) {
    for (unsigned r = 2; r <= o.r_max && ipow(p, r) <= bound; ++r) {
      const FareyGraph big(ipow(p, r));
      for (unsigned s_exp = 1; s_exp < r; ++s_exp) {
        const FareyGraph small(ipow(p, s_exp));
        for (AnchorEnd end : {AnchorEnd::kInitial, AnchorEnd::kFinal}) {
          std::size_t bad = 0;
          for (unsigned trial = 0; trial < std::max(50U, o.samples); ++trial) {
            const unsigned m = 1 + static_cast<unsigned>(rng.below(4));
            const Path gamma = random_walk(rng, small, m);
            const Vertex& endpoint = end == AnchorEnd::kInitial ? gamma.front() : gamma.back();
            std::vector<Vertex> fiber;
            for (const Vertex& v : big.vertices()) {
              if (reduce(v, small.modulus()) == endpoint) fiber.push_back(v);
            }
            const Vertex anchor = fiber[rng.below(fiber.size())];
            const auto lifts = lift_paths(big, gamma, {end, anchor});
            const BigNat expected =
                pow_nat(static_cast<unsigned long>(p), (r - s_exp) * m);
            bad += BigNat(lifts.size()) != expected;
            for (const Path& lift : lifts) {
              const Vertex& fixed = end == AnchorEnd::kInitial ? lift.front() : lift.back();
              bad += reduce(lift, small.modulus()) != gamma || fixed != anchor;
            }
          }
          s.scan(end == AnchorEnd::kInitial ? "path-lifts-initial" : "path-lifts-final",
                 kv({{"p", p}, {"s", s_exp}, {"r", r}}), std::max(50U, o.samples), bad);
        }
      }
    }
  }

  // Lifts of X_m(p) that stay in X_m(p^r).
  for (Int p : o.primes) {
    const FareyGraph base(p);
    for (unsigned m = 3; m <= 4; ++m) {
      const auto xs = enumerate_X(base, m);
      for (unsigned r = 2; r <= o.r_max && ipow(p, r) <= bound; ++r) {
        const FareyGraph big(ipow(p, r));
        const Vertex one_zero(1, 0, big.modulus());
        const Vertex zero_one(0, 1, big.modulus());
        const BigNat expected = pow_nat(static_cast<unsigned long>(p), (r - 1) * (m - 2));
        std::size_t bad = 0;
        BigNat total = 0;
        for (const Path& gamma : xs) {
          std::size_t in_x = 0;
          for (const Path& lift : lift_paths(big, gamma, {AnchorEnd::kInitial, one_zero})) {
            in_x += lift[1] == zero_one && equivalent(lift.back(), one_zero);
          }
          bad += BigNat(in_x) != expected;
          total += in_x;
        }
        s.scan("X-lift-count", kv({{"p", p}, {"m", m}, {"r", r}}), xs.size(), bad);
        s.equal("X-lifts-cover", kv({{"p", p}, {"m", m}, {"r", r}}),
                count_X(big, m), total);
      }
    }
  }

  // Lifts into Y_m(p^2) of paths of Y_m(p) that carry a liftable window.
  for (Int p : o.primes) {
    if (p * p > bound) continue;
    const FareyGraph base(p), big(p * p);
    const Vertex one_zero(1, 0, big.modulus());
    const Vertex minus_one_zero = negate(one_zero);
    for (unsigned m = 2; m <= 5; ++m) {
      const BigNat expected = pow_nat(static_cast<unsigned long>(p), m - 2);
      std::size_t cases = 0, bad = 0;
      for (const Path& gamma : enumerate_Y(base, m)) {
        if (!has_liftable_subpath(gamma, p)) continue;
        ++cases;
        std::size_t in_y = 0;
        for (const Path& lift : lift_paths(big, gamma, {AnchorEnd::kInitial, one_zero})) {
          in_y += lift.back() == minus_one_zero;
        }
        bad += BigNat(in_y) != expected;
      }
      if (cases > 0) s.scan("Y-lift-count", kv({{"p", p}, {"s", 1}, {"r", 2}, {"m", m}}), cases, bad);
    }
  }
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteResult suite_middle_vertex(const VerifyOptions&) {
  Suite s("lemma4");
  for (Int N : {4, 8, 9}) {
    const FareyGraph G(N);
    const Int p = as_prime_power(N)->p;
    std::size_t cases = 0, bad = 0, rejected = 0, rejected_bad = 0;
    for (const Vertex& u : G.vertices()) {
      for (const Vertex& w : G.vertices()) {
        const bool qualifies = u.b() % p != 0 && w.a() % p != 0 &&
                               (u.a() % p == 0 || w.b() % p == 0);
        if (!qualifies) {
          ++rejected;
          try {
            middle_vertex(u, w);
            ++rejected_bad;
          } catch (const Error& e) {
            rejected_bad += e.code() != ErrorCode::kPreconditionViolated;
          }
          continue;
        }
        ++cases;
        std::vector<Vertex> middles;
        for (const Vertex& v : G.vertices()) {
          if (is_edge(u, v) && is_edge(v, w)) middles.push_back(v);
        }
        bad += middles.size() != 1 || middles.front() != middle_vertex(u, w);
      }
    }
    s.scan("unique-middle-vertex", kv({{"n", N}}), cases, bad);
    s.scan("precondition-enforced", kv({{"n", N}}), rejected, rejected_bad);
  }
  return s.take();
}

SuiteResult suite_two_step(const VerifyOptions&) {
  Suite s("lemma7");
  for (Int N : {4, 8, 9}) {
    const FareyGraph G(N);
    const Int p = as_prime_power(N)->p;
    std::size_t cases = 0, bad = 0;
    for (Int eps : {1, -1}) {
      const Vertex end(eps, 0, N);
      for (Int a = 0; a < N; a += p) {
        for (Int b = p; b < N; b += p) {
          const Vertex start(-eps + a, b, N);
          std::size_t walks = 0;
          for (Index x : G.out_neighbors(G.index_of(start))) {
            walks += is_edge(G.vertex(x), end);
          }
          const unsigned sv = valuation(a, p), tv = valuation(b, p);
          const std::size_t expected = sv < tv ? 0 : static_cast<std::size_t>(ipow(p, tv));
          ++cases;
          bad += walks != expected;
        }
      }
    }
    s.scan("two-step-count", kv({{"n", N}}), cases, bad);
  }
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteResult suite_recurrence(const VerifyOptions& o) {
  Suite s("recurrence");
  const Int bound = lift_bound(o);
  for (Int p : o.primes) {
    const auto q = static_cast<unsigned long>(p);
    for (unsigned r = 1; r <= o.r_max && ipow(p, r) <= bound; ++r) {
      const FareyGraph G(ipow(p, r));
      std::unique_ptr<FareyGraph> lower;
      if (r > 1) lower = std::make_unique<FareyGraph>(ipow(p, r - 1));

      s.equal("z1", kv({{"p", p}, {"r", r}}), pow_nat(q, r), count_Z(G, p, 1));
      for (unsigned k = 1; k <= o.k_max + 1; ++k) {
        const BigNat z = count_Z(G, p, k);
        s.equal("z-closed-form", kv({{"p", p}, {"r", r}, {"k", k}}), z_closed_form(p, r, k), z);
        s.equal("z-integer-sum", kv({{"p", p}, {"r", r}, {"k", k}}), z_closed_form_sum(p, r, k), z);
      }
      for (unsigned k = 2; k <= o.k_max; ++k) {
        BigNat rhs = pow_nat(q, r) * count_Z(G, p, k - 1);
        for (unsigned t = 1; t < r; ++t) rhs += pow_nat(q, t) * count_Z_t(G, p, k - 1, t);
        s.equal("z-recurrence", kv({{"p", p}, {"r", r}, {"k", k}}), rhs, count_Z(G, p, k));
      }
      if (!lower) continue;
      for (unsigned k = 1; k <= o.k_max; ++k) {
        for (unsigned t = 1; t + 1 < r; ++t) {
          s.equal("zt-scaling", kv({{"p", p}, {"r", r}, {"k", k}, {"t", t}}),
                  pow_nat(q, 2 * k) * count_Z_t(*lower, p, k, t), count_Z_t(G, p, k, t));
        }
        s.equal("zt-top-valuation", kv({{"p", p}, {"r", r}, {"k", k}}),
                pow_nat(q, 2 * k - 1) * (q - 1) * count_Z(*lower, p, k),
                count_Z_t(G, p, k, r - 1));
      }
    }
  }

  // Independent route for Z: enumerate alternating paths, lift, filter.
  for (Int p : o.primes) {
    for (unsigned r = 1; r <= 2 && ipow(p, r) <= 9; ++r) {
      for (unsigned k = 1; k <= std::min(2U, o.k_max); ++k) {
        PathFamilyQuery query{Family::kZ, 0, p, r, 2 * k, 0};
        s.equal("z-by-lifting", kv({{"p", p}, {"r", r}, {"k", k}}),
                count_family(query, CountMethod::kDfs).count,
                count_family(query, CountMethod::kTransferMatrix).count);
        for (unsigned t = 1; t < r; ++t) {
          PathFamilyQuery qt{Family::kZt, 0, p, r, 2 * k, t};
          s.equal("zt-by-lifting", kv({{"p", p}, {"r", r}, {"k", k}, {"t", t}}),
                  count_family(qt, CountMethod::kDfs).count,
                  count_family(qt, CountMethod::kTransferMatrix).count);
        }
      }
    }
  }

  if (std::find(o.primes.begin(), o.primes.end(), 2) != o.primes.end()) {
    for (unsigned r = 2; r <= 3 && ipow(2, r) <= bound; ++r) {
      for (unsigned k : {2U, 4U}) {
        s.equal("w-closed-form", kv({{"r", r}, {"k", k}}), w_closed_form(r, k), count_W(r, k));
      }
    }
    s.equal("aux-graph", "k=2", "8", to_decimal(aux_graph_count(2)));
    s.equal("aux-graph", "k=4", "896", to_decimal(aux_graph_count(4)));
    for (unsigned k : {2U, 4U}) {
      s.equal("aux-graph-vs-W", kv({{"k", k}}), aux_graph_count(k), count_W(2, k));
    }
    // The weights are two-step walk counts among the lifts of 1/0 in E_4.
    const FareyGraph E4(4);
    const Vertex lifts[4] = {Vertex(1, 0, 4), Vertex(3, 0, 4), Vertex(3, 2, 4), Vertex(1, 2, 4)};
    const AuxMatrix aux = aux_graph_matrix();
    std::size_t bad = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        bad += count_paths(E4, lifts[i], lifts[j], 2) != aux[i][j];
      }
    }
    s.scan("aux-graph-from-E4", "n=4", 16, bad);
  }
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteResult suite_omega_partition(const VerifyOptions& o) {
  Suite s("omega-partition");
  const std::pair<Int, unsigned> partition_cases[] = {{2, 6}, {3, 6}, {2, 4}};
  for (const auto& [p, m] : partition_cases) {
    const FareyGraph G(p);
    const auto ys = enumerate_Y(G, m);
    const auto omegas = enumerate_Omega(p, m / 2);
    const std::set<Path> y_set(ys.begin(), ys.end());
    std::size_t omega_bad = 0;
    for (const Path& w : omegas) omega_bad += !y_set.count(w) || has_terminal_subpath(w, p);
    s.scan("omega-inside-Y", kv({{"p", p}, {"m", m}}), omegas.size(), omega_bad);
    s.equal("omega-size", kv({{"p", p}, {"m", m}}),
            pow_nat(static_cast<unsigned long>(p), m / 2), BigNat(omegas.size()));

    std::size_t in_omega = 0, terminal = 0, both_or_neither = 0;
    for (const Path& y : ys) {
      const bool om = is_omega_path(y);
      const bool te = has_terminal_subpath(y, p);
      in_omega += om;
      terminal += te;
      both_or_neither += om == te;
    }
    s.scan("partition-disjoint-cover", kv({{"p", p}, {"m", m}}), ys.size(), both_or_neither);
    s.equal("partition-sizes", kv({{"p", p}, {"m", m}}), std::to_string(ys.size()),
            std::to_string(in_omega + terminal));
    s.equal("omega-count-matches", kv({{"p", p}, {"m", m}}), std::to_string(omegas.size()),
            std::to_string(in_omega));
  }

  for (Int p : o.primes) {
    const FareyGraph G(p);
    for (unsigned m : {3U, 4U, 5U}) {
      if (m == 4 && p == 2) continue;
      std::size_t bad = 0;
      const auto ys = enumerate_Y(G, m);
      for (const Path& y : ys) {
        bad += !has_terminal_subpath(y, p) || !has_liftable_subpath(y, p);
      }
      s.scan("terminal-window-always", kv({{"p", p}, {"m", m}}), ys.size(), bad);
    }
  }
  return s.take();
}

// ---------------------------------------------------------------------------

void check_grid_bounds(const VerifyOptions& o) {
  if (o.n_max < 2 || o.m_max < 2) {
    throw Error(ErrorCode::kInvalidParams, "n-max and m-max must be >= 2");
  }
  if (!o.unsafe_large && (o.n_max > kMaxTableModulus || o.m_max > 12)) {
    throw Error(ErrorCode::kInvalidParams,
                "verify grids beyond n <= 12, m <= 12 need --unsafe-large");
  }
}

SuiteResult suite_count_grid(const VerifyOptions& o, FriezeKind kind) {
  Suite s(kind == FriezeKind::kTame ? "theorem-a" : "theorem-b");
  check_grid_bounds(o);
  std::vector<FriezeCountQuery> cells;
  for (Int n = 2; n <= o.n_max; ++n) {
    for (unsigned m = 2; m <= o.m_max; ++m) cells.push_back({n, m, kind});
  }
  std::vector<FriezeCount> results(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    results[i] = count_friezes(cells[i], CountSource::kBoth, {true, nullptr});
  });
  for (const FriezeCount& c : results) {
    const std::string params = kv({{"n", c.query.n}, {"m", c.query.m}});
    s.equal(kind == FriezeKind::kTame ? "formula-vs-totient-X" : "formula-vs-Y-over-n",
            params, *c.formula, *c.enumerated);
  }

  if (kind == FriezeKind::kTame) {
    for (Int p = 2; p <= o.n_max; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned m = 2; m <= o.m_max; ++m) {
        const auto q = static_cast<unsigned long>(p);
        BigNat num = pow_nat(q, m - 1) + (m % 2 == 0 ? 1 : -1);
        s.equal("X-at-prime", kv({{"p", p}, {"m", m}}), BigNat(num / (q + 1)), count_X(p, m));
        s.equal("field-case", kv({{"p", p}, {"m", m}}), tame_count_field(p, m),
                tame_count_formula(p, m));
      }
    }
    for (Int n = 2; n <= std::min<Int>(6, o.n_max); ++n) {
      const FareyGraph G(n);
      for (unsigned m = 2; m <= std::min(5U, o.m_max); ++m) {
        s.equal("X-by-dfs", kv({{"n", n}, {"m", m}}), BigNat(enumerate_X(G, m).size()),
                count_X(G, m));
      }
    }
    s.equal("spot", "n=5 m=6", "2084", to_decimal(tame_count_formula(5, 6)));
    const auto x32 = enumerate_X(FareyGraph(2), 3);
    s.equal("spot-unique-path", "n=2 m=3", "<1/0, 0/1, 1/1, 1/0>",
            x32.size() == 1 ? x32.front().label() : std::to_string(x32.size()) + " paths");
  } else {
    for (const FriezeCount& c : results) {
      s.equal("Y-divisible-by-n", kv({{"n", c.query.n}, {"m", c.query.m}}), "0",
              to_decimal(*c.path_count % static_cast<unsigned long>(c.query.n)));
    }
    for (Int p : {2, 3, 5, 7}) {
      for (unsigned m = 2; m <= 9; ++m) {
        s.equal("field-vs-prime-power", kv({{"p", p}, {"m", m}}), phi_field(p, m), phi_m(p, 1, m));
      }
    }
    s.equal("rational-bracket", "p=2 r=3 m=6", "800", to_decimal(phi_m(2, 3, 6)));
    for (Int n = 2; n <= std::min<Int>(6, o.n_max); ++n) {
      const FareyGraph G(n);
      for (unsigned m = 1; m <= std::min(5U, o.m_max); ++m) {
        s.equal("Y-by-dfs", kv({{"n", n}, {"m", m}}), BigNat(enumerate_Y(G, m).size()),
                count_Y(G, m));
      }
    }
    s.equal("spot", "n=2 m=4", "3", to_decimal(regular_count_formula(2, 4)));
    s.equal("spot-Y", "n=2 m=4", "6", to_decimal(count_Y(2, 4)));
    s.equal("spot", "n=12 m=5", "200", to_decimal(regular_count_formula(12, 5)));
  }
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteResult suite_frieze_render(const VerifyOptions& o) {
  Suite s("frieze-render");
  Rng rng(o.seed ^ 0x33);
  const FriezeWindow fixture = fig1_fixture();
  s.equal("fixture-diamond", "n=5 m=6", "0", std::to_string(check_diamond(fixture).size()));
  s.equal("fixture-tame", "n=5 m=6", "0", std::to_string(check_tame(fixture).size()));
  s.equal("fixture-boundary", "n=5 m=6", "0", std::to_string(check_boundary(fixture).size()));
  s.equal("fixture-text-roundtrip", "n=5 m=6", "true",
          window_from_text(window_to_text(fixture)) == fixture ? "true" : "false");
  s.equal("fixture-json-roundtrip", "n=5 m=6", "true",
          window_from_json(window_to_json(fixture)) == fixture ? "true" : "false");

  for (Int n = 2; n <= std::min<Int>(8, o.n_max); ++n) {
    const FareyGraph G(n);
    for (unsigned m = 2; m <= std::min(6U, o.m_max); ++m) {
      std::size_t bad = 0;
      for (unsigned trial = 0; trial < o.samples; ++trial) {
        const Vertex& v = random_vertex(rng, G);
        const BigNat total = count_paths(G, v, negate(v), m);
        const Path gamma = unrank_path(G, v, negate(v), m, rng.below(total));
        const FriezeWindow w = render_from_path(gamma);
        bad += !check_boundary(w).empty() || !is_regular(w) ||
               !check_diamond(w).empty() || !check_tame(w).empty();
      }
      s.scan("render-sound", kv({{"n", n}, {"m", m}}), o.samples, bad);
    }
  }
  return s.take();
}

SuiteResult suite_cache(const std::string& dir) {
  Suite s("cache");
  const CountCache cache(dir);
  for (const auto& [key, value] : cache.entries()) {
    // kind:n=<n>:m=<m>:<source>[:paths]
    std::istringstream in(key);
    std::string kind, n_part, m_part, source, extra;
    std::getline(in, kind, ':');
    std::getline(in, n_part, ':');
    std::getline(in, m_part, ':');
    std::getline(in, source, ':');
    std::getline(in, extra, ':');
    std::string actual = "unparseable key";
    try {
      FriezeCountQuery q{std::stoll(n_part.substr(2)),
                         static_cast<unsigned>(std::stoul(m_part.substr(2))),
                         kind == "tame" ? FriezeKind::kTame : FriezeKind::kRegular};
      const FriezeCount c = count_friezes(
          q, source == "formula" ? CountSource::kFormula : CountSource::kEnumerate,
          {true, nullptr});
      actual = to_decimal(source == "formula" ? *c.formula
                          : extra == "paths"  ? *c.path_count
                                              : *c.enumerated);
    } catch (const std::exception&) {
    }
    s.equal("cache-entry", key, value, actual);
  }
  return s.take();
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

std::size_t VerifyReport::check_count() const {
  std::size_t total = 0;
  for (const auto& s : suites) total += s.checks.size();
  return total;
}

std::size_t VerifyReport::failure_count() const {
  std::size_t total = 0;
  for (const auto& s : suites) {
    total += std::count_if(s.checks.begin(), s.checks.end(),
                           [](const CheckResult& c) { return !c.pass; });
  }
  return total;
}

std::string VerifyReport::to_json() const {
  json doc;
  doc["seed"] = seed;
  doc["pass"] = pass();
  doc["checks"] = check_count();
  doc["failures"] = failure_count();
  json suites_json = json::array();
  for (const auto& suite : suites) {
    json checks = json::array();
    for (const auto& c : suite.checks) {
      checks.push_back({{"name", c.name},
                        {"params", c.params},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
    }
    suites_json.push_back({{"name", suite.name}, {"pass", suite.pass()}, {"checks", std::move(checks)}});
  }
  doc["suites"] = std::move(suites_json);
  return doc.dump(2) + "\n";
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const auto& suite : suites) {
    const auto failed = std::count_if(suite.checks.begin(), suite.checks.end(),
                                      [](const CheckResult& c) { return !c.pass; });
    out << (failed == 0 ? "PASS " : "FAIL ") << suite.name << ": "
        << suite.checks.size() - static_cast<std::size_t>(failed) << "/"
        << suite.checks.size() << " checks\n";
    for (const auto& c : suite.checks) {
      if (!c.pass) {
        out << "  failed " << c.name << " [" << c.params << "] expected " << c.expected
            << ", got " << c.actual << "\n";
      }
    }
  }
  out << "seed " << seed << ": " << (pass() ? "all checks passed" : "FAILURES") << "\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "crt",           "lifting",   "lemma4",    "lemma7",       "recurrence",
      "omega-partition", "theorem-a", "theorem-b", "frieze-render"};
  return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& names = suite_names();
  if (options.suite != "all" &&
      std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw Error(ErrorCode::kInvalidParams, "unknown suite '" + options.suite + "'");
  }
  if (options.primes.empty()) throw Error(ErrorCode::kInvalidParams, "no primes given");
  for (Int p : options.primes) {
    if (!is_prime(p)) throw Error(ErrorCode::kInvalidParams, std::to_string(p) + " is not prime");
  }
  if (options.r_max < 1 || options.k_max < 1) {
    throw Error(ErrorCode::kInvalidParams, "r-max and k-max must be >= 1");
  }
  if (!options.unsafe_large && (options.k_max > 6 || options.r_max > 5)) {
    throw Error(ErrorCode::kInvalidParams, "k-max > 6 or r-max > 5 needs --unsafe-large");
  }
  if (options.samples < 1) throw Error(ErrorCode::kInvalidParams, "samples must be >= 1");
  check_grid_bounds(options);

  VerifyReport report;
  report.seed = options.seed;
  auto wanted = [&](const char* name) { return options.suite == "all" || options.suite == name; };
  if (wanted("crt")) report.suites.push_back(suite_crt(options));
  if (wanted("lifting")) report.suites.push_back(suite_lifting(options));
  if (wanted("lemma4")) report.suites.push_back(suite_middle_vertex(options));
  if (wanted("lemma7")) report.suites.push_back(suite_two_step(options));
  if (wanted("recurrence")) report.suites.push_back(suite_recurrence(options));
  if (wanted("omega-partition")) report.suites.push_back(suite_omega_partition(options));
  if (wanted("theorem-a")) report.suites.push_back(suite_count_grid(options, FriezeKind::kTame));
  if (wanted("theorem-b")) report.suites.push_back(suite_count_grid(options, FriezeKind::kRegular));
  if (wanted("frieze-render")) report.suites.push_back(suite_frieze_render(options));
  if (options.cache_dir) report.suites.push_back(suite_cache(*options.cache_dir));
  return report;
}

}  // namespace frieze
