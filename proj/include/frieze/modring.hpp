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

#ifndef FRIEZE_MODRING_HPP
#define FRIEZE_MODRING_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "frieze/bigint.hpp"

namespace frieze {

using Int = std::int64_t;

/// Least non-negative representative of a modulo n (n > 0).
constexpr Int mod(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

/// An element of Z/nZ. The stored value is always in [0, modulus).
class Residue {
 public:
  Residue(Int value, Int modulus);

  Int value() const noexcept { return value_; }
  Int modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue operator-() const;
  friend Residue operator+(const Residue& x, const Residue& y);
  friend Residue operator-(const Residue& x, const Residue& y);
  friend Residue operator*(const Residue& x, const Residue& y);
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Int value_;
  Int modulus_;
};

struct PrimePower {
  Int p;
  unsigned r;

  Int value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime powers of n with primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(Int n);

bool is_prime(Int n);

/// Returns the prime power p^r equal to n, if n is one.
std::optional<PrimePower> as_prime_power(Int n);

Int ipow(Int base, unsigned exponent);

Int gcd3(Int a, Int b, Int c);

inline constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

/// p-adic valuation of a >= 0; kInfiniteValuation for a = 0, so that the
/// ordinary unsigned comparison orders it above every finite valuation.
unsigned valuation(Int a, Int p);

Int totient(Int n);

/// The units of Z/nZ in ascending order.
std::vector<Residue> units(Int n);

/// Throws Error(kNotAUnit) when a is not invertible.
Residue inverse(const Residue& a);

/// The unique residue mod (m*n) congruent to a1 mod m and a2 mod n.
/// Throws Error(kModuliNotCoprime) when gcd(m, n) != 1.
Residue crt_combine(const Residue& a1, const Residue& a2);

// q-analogues. q_bracket works over exact rationals because the bases that
// show up in the prime-power formulas can be p^(2-k) < 1.

/// [k]_q = (q^k - 1)/(q - 1), with [k]_1 = k.
Rational q_bracket(unsigned k, const Rational& q);

/// (k choose 2)_q = (q^k - 1)(q^(k-1) - 1) / ((q - 1)(q^2 - 1)) for integer
/// q >= 1, with the q = 1 limit k(k-1)/2. Requires k >= 1.
BigNat q_binom2(unsigned k, const BigNat& q);

}  // namespace frieze

#endif  // FRIEZE_MODRING_HPP
