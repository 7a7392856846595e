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

#include <span>
#include <string>
#include <vector>

#include "pring/poly.hpp"
#include "pring/ring.hpp"

namespace pring {

// GF(p)[x]/(f) with f monic. An element's index is the base-p number whose
// digits (least significant first) are the coefficients of its residue.
class QuotientImpl final : public RingImpl {
 public:
  QuotientImpl(std::uint64_t p, FpPoly modulus);

  Family family() const override { return Family::kQuotient; }
  Index order() const override { return order_; }
  Index one() const override { return 1; }
  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;
  Index characteristic() const override { return p_; }
  std::optional<std::vector<Index>> additive_shape() const override {
    return std::vector<Index>(degree_, p_);
  }
  std::string structural_key() const override { return describe(); }
  std::string describe() const override;
  std::string format(Index a) const override {
    return residue(a).to_string();
  }

  std::uint64_t prime() const { return p_; }
  const FpPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return degree_; }
  FpPoly residue(Index a) const { return FpPoly::from_index(p_, a); }
  // Reduces g mod the modulus and encodes it.
  Index encode(const FpPoly& g) const { return (g % modulus_).to_index(); }

 private:
  Index mul_direct(Index a, Index b) const;

  std::uint64_t p_;
  FpPoly modulus_;
  std::size_t degree_;
  Index order_;
  // Full multiplication table for small rings, row-major.
  std::vector<std::uint32_t> mul_table_;
};

// f is scaled monic; deg f >= 1 and p^deg f within the size guard.
Ring make_quotient(std::uint64_t p, const FpPoly& f);

// Polynomial with coefficients in a finite ring, little-endian, no trailing
// zeros.
class PolyOverRing {
 public:
  explicit PolyOverRing(Ring ring) : ring_(std::move(ring)) {}
  PolyOverRing(Ring ring, std::vector<Index> coeffs);

  const Ring& ring() const { return ring_; }
  const std::vector<Index>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  Index coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  friend PolyOverRing operator+(const PolyOverRing& a, const PolyOverRing& b);
  friend PolyOverRing operator*(const PolyOverRing& a, const PolyOverRing& b);
  friend bool operator==(const PolyOverRing& a, const PolyOverRing& b);
  PolyOverRing pow(std::uint64_t e) const;
  // g(x^k).
  PolyOverRing compose_xpow(std::size_t k) const;

  std::string to_string() const;

 private:
  void normalize();

  Ring ring_;
  std::vector<Index> coeffs_;
};

// Image of f under proj applied coefficientwise; proj must land in GF(p).
FpPoly reduce_mod_maximal(const PolyOverRing& f, const RingHom& proj);

// R[x]/(f) for a p-ring R = GF(p)^n, built as the product of the component
// quotients GF(p)[x]/(f_j). Components whose f_j is a nonzero constant are
// zero rings and are dropped.
struct PolyQuotient {
  Ring ring;
  // f_j for every projection, including dropped constant ones.
  std::vector<FpPoly> reductions;
  // Projection indices that contribute a factor, in factor order.
  std::vector<std::size_t> kept;
};

PolyQuotient make_quotient_over_pring(const Ring& base, const PolyOverRing& f,
                                      std::span<const RingHom> projections);

}  // namespace pring
