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

#ifndef FRIEZE_BIGINT_HPP
#define FRIEZE_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace frieze {

// Every count in the library is an exact natural; nothing on a counting path
// uses fixed-width arithmetic.
using BigNat = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigNat& x) { return x.get_str(10); }

inline BigNat pow_nat(unsigned long base, unsigned long exponent) {
  BigNat out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// base^exponent for a possibly negative exponent.
inline Rational pow_rational(const Rational& base, long exponent) {
  Rational out = 1;
  Rational b = base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1U) out *= b;
    b *= b;
    e >>= 1U;
  }
  if (exponent < 0) out = 1 / out;
  out.canonicalize();
  return out;
}

}  // namespace frieze

#endif  // FRIEZE_BIGINT_HPP
