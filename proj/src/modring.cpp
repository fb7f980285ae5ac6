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

#include "frieze/modring.hpp"

#include <numeric>
#include <string>

#include "frieze/error.hpp"

namespace frieze {

namespace {

void require_same_modulus(const Residue& x, const Residue& y) {
  if (x.modulus() != y.modulus()) {
    throw Error(ErrorCode::kModulusMismatch,
                "residues mod " + std::to_string(x.modulus()) + " and mod " +
                    std::to_string(y.modulus()));
  }
}

Int mulmod(Int a, Int b, Int n) {
  return static_cast<Int>(static_cast<__int128>(a) * b % n);
}

}  // namespace

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  if (modulus < 1) {
    throw Error(ErrorCode::kInvalidModulus, "modulus must be positive");
  }
  value_ = mod(value, modulus);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue operator+(const Residue& x, const Residue& y) {
  require_same_modulus(x, y);
  return Residue(x.value_ + y.value_, x.modulus_);
}

Residue operator-(const Residue& x, const Residue& y) {
  require_same_modulus(x, y);
  return Residue(x.value_ - y.value_, x.modulus_);
}

Residue operator*(const Residue& x, const Residue& y) {
  require_same_modulus(x, y);
  return Residue(mulmod(x.value_, y.value_, x.modulus_), x.modulus_);
}

Int PrimePower::value() const { return ipow(p, r); }

Int ipow(Int base, unsigned exponent) {
  Int out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Int gcd3(Int a, Int b, Int c) { return std::gcd(std::gcd(a, b), c); }

Factorization factorize(Int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "factorize needs n >= 1");
  Factorization out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    out.push_back({p, r});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(Int n) {
  if (n < 2) return std::nullopt;
  const Factorization f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

unsigned valuation(Int a, Int p) {
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "valuation needs a prime");
  if (a < 0) a = -a;
  if (a == 0) return kInfiniteValuation;
  unsigned e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

Int totient(Int n) {
  Int out = n;
  for (const PrimePower& pp : factorize(n)) out = out / pp.p * (pp.p - 1);
  return out;
}

std::vector<Residue> units(Int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidModulus, "units needs n >= 1");
  std::vector<Residue> out;
  // Z/1Z is the zero ring; its single element 0 is a unit.
  if (n == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  for (Int a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.emplace_back(a, n);
  }
  return out;
}

Residue inverse(const Residue& a) {
  const Int n = a.modulus();
  // Extended Euclid on (a, n).
  Int old_r = a.value(), r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && n != 1) {
    throw Error(ErrorCode::kNotAUnit, std::to_string(a.value()) +
                                          " is not a unit mod " +
                                          std::to_string(n));
  }
  return Residue(old_s, n);
}

Residue crt_combine(const Residue& a1, const Residue& a2) {
  const Int m = a1.modulus();
  const Int n = a2.modulus();
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorCode::kModuliNotCoprime,
                "moduli " + std::to_string(m) + " and " + std::to_string(n) +
                    " are not coprime");
  }
  // x = a1 + m * ((a2 - a1) * m^{-1} mod n)
  const Int m_inv = inverse(Residue(m, n)).value();
  const Int t = mulmod(mod(a2.value() - a1.value(), n), m_inv, n);
  return Residue(a1.value() + m * t, m * n);
}

Rational q_bracket(unsigned k, const Rational& q) {
  if (q <= 0) throw Error(ErrorCode::kInvalidArgument, "q_bracket needs q > 0");
  if (q == 1) return Rational(k);
  Rational out = (pow_rational(q, k) - 1) / (q - 1);
  out.canonicalize();
  return out;
}

BigNat q_binom2(unsigned k, const BigNat& q) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "q_binom2 needs k >= 1");
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q_binom2 needs q >= 1");
  if (q == 1) return BigNat(k) * (k - 1) / 2;
  BigNat qk, qk1;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
  mpz_pow_ui(qk1.get_mpz_t(), q.get_mpz_t(), k - 1);
  const BigNat num = (qk - 1) * (qk1 - 1);
  const BigNat den = (q - 1) * (q * q - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorCode::kNonIntegerResult, "q_binom2 division is not exact");
  }
  BigNat out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace frieze
