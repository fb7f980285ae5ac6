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

#ifndef FRIEZE_PATHCOUNT_HPP
#define FRIEZE_PATHCOUNT_HPP

#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "frieze/bigint.hpp"
#include "frieze/error.hpp"
#include "frieze/fareygraph.hpp"

namespace frieze {

/// A walk v_0 -> v_1 -> ... -> v_m in some E_n with m >= 1.
class Path {
 public:
  /// Throws Error(kInvalidArgument) if there are fewer than two vertices,
  /// the moduli differ, or some consecutive pair is not an edge.
  explicit Path(std::vector<Vertex> vertices);

  Int modulus() const { return vertices_.front().modulus(); }
  /// Number of edges.
  std::size_t length() const { return vertices_.size() - 1; }
  std::span<const Vertex> vertices() const { return vertices_; }
  const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
  const Vertex& front() const { return vertices_.front(); }
  const Vertex& back() const { return vertices_.back(); }

  /// "<1/0, 0/1, 1/1>"
  std::string label() const;

  friend auto operator<=>(const Path& x, const Path& y) {
    return x.vertices_ <=> y.vertices_;
  }
  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

Path reduce(const Path& path, Int m);

/// Thrown by enumerate_paths when more than `limit` walks exist.
class LimitExceeded : public Error {
 public:
  LimitExceeded(std::size_t partial_count, std::size_t limit);
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// ---------------------------------------------------------------------------
// Walk counting and enumeration in a single graph.

/// Number of walks u -> v of length m, by iterated vector-matrix products.
BigNat count_paths(const FareyGraph& G, const Vertex& u, const Vertex& v,
                   unsigned m);

/// Entry i is the number of walks of length m from `start` to vertex i.
std::vector<BigNat> walk_distribution(const FareyGraph& G,
                                      FareyGraph::Index start, unsigned m);

/// All walks u -> v of length m >= 1, in DFS order over the adjacency lists
/// (which is lexicographic order on the vertex sequences).
/// Throws LimitExceeded when more than `limit` exist.
std::vector<Path> enumerate_paths(const FareyGraph& G, const Vertex& u,
                                  const Vertex& v, unsigned m,
                                  std::size_t limit = 1'000'000);

/// The index-th walk u -> v of length m in enumerate_paths order, without
/// materializing the others. Throws Error(kOutOfRange) past the end.
Path unrank_path(const FareyGraph& G, const Vertex& u, const Vertex& v,
                 unsigned m, const BigNat& index);

// ---------------------------------------------------------------------------
// Masked transfer-matrix engine.

/// Allowed vertex sets S_0..S_m for walks of length m.
struct TransferMask {
  std::vector<std::vector<std::uint8_t>> allowed;

  unsigned length() const { return static_cast<unsigned>(allowed.size()) - 1; }
};

/// Entry i is the number of walks from `start` whose j-th vertex lies in
/// S_j for every j and that end at vertex i. Throws Error(kInvalidParams)
/// for an empty or malformed mask.
std::vector<BigNat> masked_distribution(const FareyGraph& G,
                                        FareyGraph::Index start,
                                        const TransferMask& mask);

// ---------------------------------------------------------------------------
// Path families.

enum class Family { kX, kY, kOmega, kZ, kZt, kW };

const char* family_name(Family f);

/// Parameters of one path family. X and Y use `n`; the rest live over a
/// prime power p^r and have even length 2k.
struct PathFamilyQuery {
  Family family = Family::kX;
  Int n = 0;
  Int p = 0;
  unsigned r = 0;
  unsigned m = 0;
  unsigned t = 0;

  unsigned k() const { return m / 2; }
  /// Throws Error(kInvalidParams) when the family constraints fail.
  void validate() const;
};

enum class CountMethod { kFormula, kTransferMatrix, kDfs };

const char* method_name(CountMethod m);

struct CountReport {
  PathFamilyQuery query;
  CountMethod method = CountMethod::kTransferMatrix;
  BigNat count;
  std::chrono::nanoseconds elapsed{0};
};

/// Counts the family by transfer matrix (or DFS for kDfs, which enumerates).
CountReport count_family(const PathFamilyQuery& query,
                         CountMethod method = CountMethod::kTransferMatrix);

/// |X_m(n)|: walks 1/0 -> 0/1 -> ... -> lambda/0 (lambda a unit) of length m.
BigNat count_X(const FareyGraph& G, unsigned m);
BigNat count_X(Int n, unsigned m);
std::vector<Path> enumerate_X(const FareyGraph& G, unsigned m,
                              std::size_t limit = 1'000'000);

/// |Y_m(n)|: walks 1/0 -> ... -> -1/0 of length m.
BigNat count_Y(const FareyGraph& G, unsigned m);
BigNat count_Y(Int n, unsigned m);
std::vector<Path> enumerate_Y(const FareyGraph& G, unsigned m,
                              std::size_t limit = 1'000'000);

// ---------------------------------------------------------------------------
// Lifting.

enum class AnchorEnd { kInitial, kFinal };

struct Anchor {
  AnchorEnd end;
  Vertex vertex;  // lives in the target graph
};

/// All walks in `target` whose reduction to gamma's modulus is gamma and
/// whose anchored endpoint is anchor.vertex, sorted. gamma's modulus must
/// divide target's. Throws Error(kBadAnchor) if the anchor does not reduce
/// to the matching endpoint of gamma.
std::vector<Path> lift_paths(const FareyGraph& target, const Path& gamma,
                             const Anchor& anchor);

/// For u = a/b and w = c/d in E_{p^r} with b, c nonzero mod p and a or d zero
/// mod p, the unique v with u -> v -> w. Throws Error(kPreconditionViolated).
Vertex middle_vertex(const Vertex& u, const Vertex& w);

/// True iff some window a/b -> * -> c/d of the path has b, c nonzero mod p
/// and a or d zero mod p.
bool has_liftable_subpath(const Path& path, Int p);

/// True iff some window reduces mod p to a/b -> c/1 -> -1/0 or
/// a/b -> c/-1 -> 1/0 with b nonzero. These are the windows that separate
/// the semiclosed paths of E_p from the alternating ones.
bool has_terminal_subpath(const Path& path, Int p);

/// True iff the path (in E_p) alternates (-1)^i/0 at even positions and
/// lambda/(-1)^i at odd positions.
bool is_omega_path(const Path& path);

/// The p^k alternating paths 1/0 -> l1/1 -> -1/0 -> l2/-1 -> ... -> eps/0 of
/// length 2k in E_p, sorted.
std::vector<Path> enumerate_Omega(Int p, unsigned k);

/// Mask for lifts to E_{p^r} (= G) of alternating paths of length 2k.
TransferMask omega_lift_mask(const FareyGraph& G, Int p, unsigned k);

/// |Z_k(r)|: lifts starting at 1/0 and ending at eps/0, eps = (-1)^k.
BigNat count_Z(Int p, unsigned r, unsigned k);
BigNat count_Z(const FareyGraph& G, Int p, unsigned k);

/// |Z_k(r, t)|: as above but ending at (eps + a)/b with a, b = 0 mod p,
/// v_p(b) = t and v_p(a) >= t. Requires 1 <= t < r.
BigNat count_Z_t(Int p, unsigned r, unsigned k, unsigned t);
BigNat count_Z_t(const FareyGraph& G, Int p, unsigned k, unsigned t);

/// |W_k(r)| for p = 2: lifts ending at exactly -1/0. k must be even; zero
/// at r = 1 where -1/0 = 1/0.
BigNat count_W(unsigned r, unsigned k);

/// The weighted 4-vertex graph on the lifts {1/0, -1/0, -1/2, 1/2} of 1/0 to
/// E_4, with weights counting two-step walks.
using AuxMatrix = std::array<std::array<BigNat, 4>, 4>;
AuxMatrix aux_graph_matrix();

/// (1/0, -1/0) entry of the k-th power of aux_graph_matrix().
BigNat aux_graph_count(unsigned k);

}  // namespace frieze

#endif  // FRIEZE_PATHCOUNT_HPP
