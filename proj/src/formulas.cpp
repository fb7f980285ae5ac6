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

#include "frieze/formulas.hpp"

#include <string>

#include "frieze/error.hpp"

namespace frieze {

namespace {

void require_prime(Int p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidParams, std::to_string(p) + " is not prime");
  }
}

void require_width(unsigned m) {
  if (m < 2) throw Error(ErrorCode::kInvalidParams, "width must be >= 2");
}

BigNat exact_quotient(const BigNat& num, const BigNat& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorCode::kNonIntegerResult,
                std::string(what) + ": " + to_decimal(num) + " / " +
                    to_decimal(den) + " is not an integer");
  }
  BigNat out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigNat as_integer(Rational x, const char* what) {
  x.canonicalize();
  if (x.get_den() != 1) {
    throw Error(ErrorCode::kNonIntegerResult,
                std::string(what) + " assembled to " + x.get_str());
  }
  return x.get_num();
}

Rational pow_r(Int p, long e) { return pow_rational(Rational(p), e); }

}  // namespace

const char* kind_name(FriezeKind kind) {
  return kind == FriezeKind::kTame ? "tame" : "regular";
}

BigNat tame_count_formula(Int n, unsigned m) {
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  require_width(m);
  BigNat total = 1;
  for (const PrimePower& pp : factorize(n)) {
    const auto p = static_cast<unsigned long>(pp.p);
    BigNat num = pow_nat(p, (pp.r - 1) * (m - 1));
    num *= pow_nat(p, m - 1) + (m % 2 == 0 ? 1 : -1);
    num *= p - 1;
    total *= exact_quotient(num, BigNat(p + 1), "tame count factor");
  }
  return total;
}

BigNat tame_count_field(Int p, unsigned m) {
  require_prime(p);
  require_width(m);
  const auto q = static_cast<unsigned long>(p);
  const BigNat num = (pow_nat(q, m - 1) + (m % 2 == 0 ? 1 : -1)) * (q - 1);
  return exact_quotient(num, BigNat(q + 1), "field tame count");
}

BigNat phi_m(Int p, unsigned r, unsigned m) {
  require_prime(p);
  require_width(m);
  if (r < 1) throw Error(ErrorCode::kInvalidParams, "r must be >= 1");
  // (r-1)(m-3) is negative only at m = 2, where the bracket term restores
  // integrality.
  const Rational lead = pow_r(p, static_cast<long>(r - 1) * (static_cast<long>(m) - 3));
  const unsigned k = m / 2;
  if (m % 2 == 1) {
    return as_integer(lead * q_bracket(k, Rational(p * p)), "phi_m (m odd)");
  }
  const Rational binom(q_binom2(k, BigNat(p)));
  const Rational pk1 = pow_r(p, static_cast<long>(k) - 1);
  if (k % 2 == 0 && p != 2) {
    return as_integer(lead * (p - 1) * binom, "phi_m (k even, p odd)");
  }
  if (k % 2 == 0 && p == 2 && r != 1) {
    return as_integer(lead * ((p - 1) * binom + pk1 - 1), "phi_m (k even, p = 2)");
  }
  const Rational bracket =
      q_bracket(r - 1, pow_r(p, 2 - static_cast<long>(k)));
  return as_integer(lead * ((p - 1) * (binom + bracket) + pk1), "phi_m (otherwise)");
}

BigNat regular_count_formula(Int n, unsigned m) {
  if (n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  require_width(m);
  BigNat total = 1;
  for (const PrimePower& pp : factorize(n)) total *= phi_m(pp.p, pp.r, m);
  return total;
}

BigNat phi_field(Int p, unsigned m) {
  require_prime(p);
  require_width(m);
  const unsigned k = m / 2;
  if (m % 2 == 1) {
    return as_integer(q_bracket(k, Rational(p * p)), "phi_field (m odd)");
  }
  const BigNat binom = q_binom2(k, BigNat(p));
  if (k % 2 == 0 && p != 2) return (p - 1) * binom;
  return (p - 1) * binom + pow_nat(static_cast<unsigned long>(p), k - 1);
}

BigNat frieze_count_formula(const FriezeCountQuery& query) {
  return query.kind == FriezeKind::kTame ? tame_count_formula(query.n, query.m)
                                         : regular_count_formula(query.n, query.m);
}

BigNat z_closed_form(Int p, unsigned r, unsigned k) {
  require_prime(p);
  if (r < 1 || k < 1) throw Error(ErrorCode::kInvalidParams, "need r, k >= 1");
  const long e = static_cast<long>(r - 1) * (2 * static_cast<long>(k) - 2) + 1;
  const Rational bracket =
      q_bracket(r - 1, pow_r(p, 2 - static_cast<long>(k)));
  const Rational value =
      pow_r(p, e) * ((p - 1) * bracket + pow_r(p, static_cast<long>(k) - 1));
  return as_integer(value, "Z_k(r) closed form");
}

BigNat z_closed_form_sum(Int p, unsigned r, unsigned k) {
  require_prime(p);
  if (r < 1 || k < 1) throw Error(ErrorCode::kInvalidParams, "need r, k >= 1");
  const long e = static_cast<long>(r - 1) * (2 * static_cast<long>(k) - 2) + 1;
  const auto q = static_cast<unsigned long>(p);
  BigNat total = pow_nat(q, static_cast<unsigned long>(e + k - 1));
  for (long j = 0; j + 2 <= static_cast<long>(r); ++j) {
    const long exponent = e + (2 - static_cast<long>(k)) * j;
    if (exponent < 0) {
      throw Error(ErrorCode::kNonIntegerResult, "negative exponent in Z_k(r) sum");
    }
    total += (q - 1) * pow_nat(q, static_cast<unsigned long>(exponent));
  }
  return total;
}

BigNat w_closed_form(unsigned r, unsigned k) {
  if (r < 2 || k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParams, "W_k(r) formula needs r >= 2, k even");
  }
  return pow_nat(2, (r - 2) * (2 * k - 2)) * pow_nat(2, 2 * k - 1) *
         (pow_nat(2, k - 1) - 1);
}

}  // namespace frieze
