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

#pragma once

#include <cstdint>
#include <optional>

namespace pring {

using Index = std::uint64_t;

// Trial division. The definitions here require p prime, so every public entry
// point that takes a p validates it with this.
bool is_prime(std::uint64_t n);

// Throws kInvalidParameter unless p is prime.
void require_prime(std::uint64_t p);

// Exponent of p in n (n >= 1, p >= 2).
unsigned p_valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
// k mod m in [0, m) for signed k.
std::uint64_t reduce_signed(std::int64_t k, std::uint64_t m);

// Overflow-checked helpers; nullopt on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);
std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace pring
