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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pring/constructions.hpp"
#include "pring/ideal.hpp"
#include "pring/poly.hpp"
#include "pring/quotient.hpp"
#include "pring/ring.hpp"

namespace pring {

enum class Method { kOracle, kTheorem };

std::string_view to_string(Method m);

struct DecisionReport {
  bool verdict = false;
  Method method = Method::kOracle;
  // Oracle failures carry the first offending element in index order.
  std::optional<Index> witness;
  std::string witness_text;
  Index checked = 0;
  std::chrono::microseconds elapsed{0};
  // Ordered key/value facts for reports.
  std::vector<std::pair<std::string, std::string>> details;

  const std::string* detail(std::string_view key) const;
};

// --- Brute-force oracles ---------------------------------------------------

// x^p = x and px = 0 for every x. workers = 0 picks a default.
DecisionReport is_p_ring_oracle(const Ring& ring, std::uint64_t p,
                                unsigned workers = 0);
// For every a some b with a = a^2 b.
DecisionReport is_vnr_oracle(const Ring& ring, unsigned workers = 0);
DecisionReport is_p_ideal(const IdealDesc& ideal, std::uint64_t p);
// All ideals, ordered by size and then by element list.
std::vector<IdealDesc> enumerate_ideals_oracle(const Ring& ring);
// enumerate_ideals_oracle filtered by is_p_ideal.
std::vector<IdealDesc> p_ideals_oracle(const Ring& ring, std::uint64_t p);

// --- Theorem-based fast paths ----------------------------------------------

// p-ideals of Z/nZ from v_p(n) alone: (0), plus (n/p)Z/nZ when v_p(n) = 1.
std::vector<IdealDesc> p_ideals_of_zmod(Index n, std::uint64_t p);

// GF(p)[x]/(f) has a nonzero p-ideal iff f has a simple root in GF(p).
DecisionReport quotient_has_p_ideal(std::uint64_t p, const FpPoly& f);

// R = GF(p)^n via n projections R -> GF(p).
struct McCoyDecomposition {
  std::uint64_t p = 0;
  std::size_t n = 0;
  Ring target;
  std::vector<RingHom> projections;
  // Kernels of the projections; empty on the structural route.
  std::vector<IdealDesc> maximal_ideals;
  // R -> GF(p)^n, a verified bijective hom; only on the oracle route.
  std::optional<RingHom> iso;
  Index ideal_count = 0;
  Index order = 0;
  Method method = Method::kOracle;
};

// Finds the maximal ideals by ideal enumeration, builds the CRT map and
// verifies |R| = p^n, 2^n ideals (all p-ideals) and bijectivity. R must be a
// p-ring within the oracle guard.
McCoyDecomposition mccoy_decompose(const Ring& ring, std::uint64_t p);
// Coordinate projections of GF(p)^n (or GF(p)); no enumeration.
McCoyDecomposition coordinate_decomposition(const Ring& ring, std::uint64_t p);
// coordinate_decomposition above the oracle guard, mccoy_decompose otherwise.
McCoyDecomposition decompose_pring(const Ring& ring, std::uint64_t p);

// R[x]/(f) is a p-ring iff every reduction f_j divides x^p - x.
DecisionReport pring_poly_quotient_is_pring(const Ring& base,
                                            const PolyOverRing& f,
                                            std::uint64_t p);

// The amalgamation of A with B along J is a p-ring iff A is a p-ring and J is a p-ideal of B.
DecisionReport amalgamation_is_pring(const AmalgDesc& desc, std::uint64_t p);

enum class CheckMode { kPRing, kVnr };

// The trivial extension of A by E is a p-ring (regular) iff A is and E = 0.
DecisionReport trivial_ext_check(const Ring& a, const ModuleDesc& e,
                                 std::uint64_t p, CheckMode mode);

// Structural deciders used by the fast paths. They recurse through the
// ring's construction and only fall back to an oracle where no criterion
// applies.
DecisionReport is_p_ring(const Ring& ring, std::uint64_t p);
DecisionReport is_vnr(const Ring& ring);

// b with a = a^2 b in a p-ring: a for p = 2, a^(p-2) otherwise.
Index vnr_certificate(const Ring& ring, std::uint64_t p, Index a);

}  // namespace pring
