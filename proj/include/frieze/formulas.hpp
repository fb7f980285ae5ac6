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

#ifndef FRIEZE_FORMULAS_HPP
#define FRIEZE_FORMULAS_HPP

#include "frieze/bigint.hpp"
#include "frieze/modring.hpp"

namespace frieze {

enum class FriezeKind { kTame, kRegular };

const char* kind_name(FriezeKind kind);

struct FriezeCountQuery {
  Int n = 2;
  unsigned m = 2;  // width
  FriezeKind kind = FriezeKind::kTame;
};

// Closed forms. All of them assemble exact rationals or exact integer
// quotients; a division that does not come out exact throws
// Error(kNonIntegerResult) instead of rounding. Invalid parameters throw
// Error(kInvalidParams).

/// Tame friezes of width m over Z/nZ:
///   prod_{p^r || n} p^((r-1)(m-1)) (p^(m-1) + (-1)^m)(p-1)/(p+1).
/// n = 1 gives the empty product 1.
BigNat tame_count_formula(Int n, unsigned m);

/// The field case (p^(m-1) + (-1)^m)(p-1)/(p+1).
BigNat tame_count_field(Int p, unsigned m);

/// Regular tame friezes of width m over Z/p^rZ. Branches are tried in the
/// printed order: m odd; m = 2k with k even and p != 2; k even, p = 2,
/// r != 1; otherwise.
BigNat phi_m(Int p, unsigned r, unsigned m);

/// prod over the factorization of n of phi_m.
BigNat regular_count_formula(Int n, unsigned m);

/// Regular tame friezes of width m over the field Z/pZ (three cases).
BigNat phi_field(Int p, unsigned m);

BigNat frieze_count_formula(const FriezeCountQuery& query);

/// |Z_k(r)| = p^((r-1)(2k-2)+1) ((p-1)[r-1]_{p^(2-k)} + p^(k-1)), assembled
/// over the rationals.
BigNat z_closed_form(Int p, unsigned r, unsigned k);

/// The same quantity with the bracket expanded into an integer sum,
///   p^(e+k-1) + (p-1) sum_{j=0}^{r-2} p^(e+(2-k)j),  e = (r-1)(2k-2)+1,
/// where every exponent is non-negative.
BigNat z_closed_form_sum(Int p, unsigned r, unsigned k);

/// |W_k(r)| = 2^((r-2)(2k-2)) 2^(2k-1) (2^(k-1) - 1) for k even, r >= 2.
BigNat w_closed_form(unsigned r, unsigned k);

}  // namespace frieze

#endif  // FRIEZE_FORMULAS_HPP
