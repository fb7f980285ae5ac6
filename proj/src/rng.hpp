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

#ifndef FRIEZE_SRC_RNG_HPP
#define FRIEZE_SRC_RNG_HPP

#include <cstdint>
#include <random>

#include "frieze/bigint.hpp"

namespace frieze {

// Seeded draws built only on the mt19937_64 output sequence, which the
// standard pins down exactly; the distribution adaptors are not, so bounded
// draws are done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, bound), bound > 0.
  BigNat below(const BigNat& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
      BigNat x = 0;
      for (std::size_t w = 0; w < words; ++w) {
        x <<= 64;
        const std::uint64_t chunk = engine_();
        x += BigNat(static_cast<unsigned long>(chunk >> 32)) << 32;
        x += static_cast<unsigned long>(chunk & 0xffffffffULL);
      }
      // Keep only `bits` bits so the rejection rate stays below one half.
      mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
      if (x < bound) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace frieze

#endif  // FRIEZE_SRC_RNG_HPP
