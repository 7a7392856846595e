// Copyright 2026 The pring Authors.
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

#include "pring/numeric.hpp"

#include <numeric>
#include <string>

#include "pring/error.hpp"

namespace pring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::kInvalidParameter,
                "p must be prime, got " + std::to_string(p));
  }
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) {
    throw Error(Errc::kInvalidParameter, "p_valuation needs n >= 1, p >= 2");
  }
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using U128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<U128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(Errc::kDivisionByZero, "zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_signed(std::int64_t k, std::uint64_t m) {
  if (k >= 0) return static_cast<std::uint64_t>(k) % m;
  // -(k + 1) avoids overflow at INT64_MIN.
  std::uint64_t mag = static_cast<std::uint64_t>(-(k + 1)) + 1;
  std::uint64_t r = mag % m;
  return r == 0 ? 0 : m - r;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace pring
