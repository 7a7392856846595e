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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pring/poly.hpp"
#include "pring/ring.hpp"

namespace pring {

// An ideal, held structurally when the ring family allows it and
// extensionally otherwise. Both forms expand to the same sorted index set.
class IdealDesc {
 public:
  // kZ/nZ with k | n; k = 0 is the zero ideal.
  struct ZmodMultiples {
    Index k;
  };
  // (g) in GF(p)[x]/(f) with g a monic divisor of f.
  struct QuotientDivisor {
    FpPoly g;
  };
  // I_1 x ... x I_n in a product ring.
  struct ProductOf {
    std::vector<IdealDesc> parts;
  };
  struct Extensional {
    std::vector<Index> elements;
  };
  using Repr =
      std::variant<ZmodMultiples, QuotientDivisor, ProductOf, Extensional>;

  static IdealDesc zmod_multiples(const Ring& ring, Index k);
  static IdealDesc quotient_divisor(const Ring& ring, const FpPoly& g);
  static IdealDesc product_of(const Ring& ring, std::vector<IdealDesc> parts);
  // Verifies closure; throws kIdealInvalid with a witness otherwise.
  static IdealDesc extensional(const Ring& ring, std::vector<Index> elements);
  // Smallest ideal containing the generators.
  static IdealDesc generated_by(const Ring& ring, std::span<const Index> gens);
  static IdealDesc zero(const Ring& ring);
  static IdealDesc whole(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const Repr& repr() const { return repr_; }
  bool is_structural() const {
    return !std::holds_alternative<Extensional>(repr_);
  }

  // Sorted element indices.
  std::vector<Index> elements() const;
  Index size() const;
  bool contains(Index a) const;
  bool is_zero() const { return size() == 1; }

  // The same ideal in extensional form.
  IdealDesc to_extensional() const;

  // "(0)", "20Z/60Z", "(x+1)", "{0,3}", "(0) x Z/3Z".
  std::string to_string() const;

  friend bool operator==(const IdealDesc& a, const IdealDesc& b);

 private:
  IdealDesc(Ring ring, Repr repr) : ring_(std::move(ring)), repr_(std::move(repr)) {}

  Ring ring_;
  Repr repr_;
};

struct IdealViolation {
  std::string law;
  Index a;
  Index b;
};

// Checks that the sorted set contains 0, is closed under addition and absorbs
// multiplication by every ring element. Returns the first violation.
std::optional<IdealViolation> check_ideal(const Ring& ring,
                                          std::span<const Index> sorted);

// Additive closure of I + J as a sorted set, both given as sorted sets of
// additive subgroups.
std::vector<Index> ideal_sum(const Ring& ring, std::span<const Index> a,
                             std::span<const Index> b);

}  // namespace pring
