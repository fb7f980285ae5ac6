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

#ifndef FRIEZE_SERVICE_HPP
#define FRIEZE_SERVICE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze/bigint.hpp"
#include "frieze/formulas.hpp"
#include "frieze/pathcount.hpp"
#include "frieze/window.hpp"

namespace frieze {

// Desk-scale limits; callers can lift them with `unsafe_large`.
inline constexpr Int kMaxCountModulus = 30;
inline constexpr Int kMaxTableModulus = 12;
inline constexpr Int kMaxGraphModulus = 60;
inline constexpr Int kMaxLiftModulus = 27;
inline constexpr unsigned kMaxWidth = 64;

enum class CountSource { kFormula, kEnumerate, kBoth };

/// One frieze count computed by closed form, by path counting, or both.
struct FriezeCount {
  FriezeCountQuery query;
  std::optional<BigNat> formula;
  /// totient(n)|X_m(n)| (tame) or |Y_m(n)|/n (regular).
  std::optional<BigNat> enumerated;
  /// |X_m(n)| or |Y_m(n)| behind `enumerated`.
  std::optional<BigNat> path_count;

  bool match() const {
    return !formula || !enumerated || *formula == *enumerated;
  }
};

/// A JSON map from query keys to decimal counts, stored as counts.json
/// inside a directory.
class CountCache {
 public:
  explicit CountCache(std::string directory);

  std::optional<BigNat> lookup(const std::string& key) const;
  void store(const std::string& key, const BigNat& value);
  /// Throws Error(kIo) when the file cannot be written.
  void save() const;
  const std::map<std::string, std::string>& entries() const { return entries_; }
  std::string path() const;

 private:
  std::string directory_;
  std::map<std::string, std::string> entries_;
};

std::string cache_key(const FriezeCountQuery& query, CountSource source);

struct CountOptions {
  bool unsafe_large = false;
  CountCache* cache = nullptr;
};

/// Throws Error(kInvalidParams) for n < 2, m < 2 or beyond the desk bounds.
FriezeCount count_friezes(const FriezeCountQuery& query, CountSource source,
                          const CountOptions& options = {});

std::string frieze_count_to_json(const FriezeCount& count);

/// One row per (n, m) with 2 <= n <= n_max, 2 <= m <= m_max in that order,
/// with both routes computed. Cells run on worker threads.
std::vector<FriezeCount> count_table(FriezeKind kind, Int n_max, unsigned m_max,
                                     bool unsafe_large = false);

/// Header kind,n,m,formula,enumerated,match.
std::string table_to_csv(const std::vector<FriezeCount>& rows);
std::string table_to_json(const std::vector<FriezeCount>& rows);

struct RenderResult {
  Path path;
  BigNat index;
  BigNat total;  // |Y_m(n)|
  FriezeWindow window;
};

/// Renders the index-th path of Y_m(n) in canonical DFS order.
/// Throws Error(kOutOfRange) when index >= |Y_m(n)|.
RenderResult render_indexed(Int n, unsigned m, const BigNat& index,
                            unsigned periods = 1, bool unsafe_large = false);

/// Renders a path of Y_m(n) drawn uniformly with the given seed.
RenderResult render_seeded(Int n, unsigned m, std::uint64_t seed,
                           unsigned periods = 1, bool unsafe_large = false);

/// Runs fn(0..count-1) on worker threads; fn must only touch slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace frieze

#endif  // FRIEZE_SERVICE_HPP
