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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pring/numeric.hpp"

namespace pring {

enum class Family {
  kZmod,
  kPrimeField,
  kQuotient,
  kProduct,
  kTrivialExt,
  kAmalgamation,
};

std::string_view to_string(Family f);

// Backing implementation of a finite commutative ring with identity.
// Elements are the indices [0, order()); index 0 is always zero.
class RingImpl {
 public:
  virtual ~RingImpl() = default;

  virtual Family family() const = 0;
  virtual Index order() const = 0;
  virtual Index one() const = 0;
  virtual Index add(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index mul(Index a, Index b) const = 0;

  // Additive order of one. The default walks k * 1.
  virtual Index characteristic() const;

  // Cyclic orders m_0, m_1, ... such that an index is the mixed-radix number
  // with digits in Z/m_i and addition is digitwise. nullopt when the index
  // encoding has no such shape.
  virtual std::optional<std::vector<Index>> additive_shape() const {
    return std::nullopt;
  }

  // Equal keys mean equal rings with the same encoding. Empty means the ring
  // is only equal to itself.
  virtual std::string structural_key() const { return {}; }

  virtual std::string describe() const = 0;
  virtual std::string format(Index a) const = 0;
};

class Element;

// Shared immutable handle to a RingImpl.
class Ring {
 public:
  explicit Ring(std::shared_ptr<const RingImpl> impl);

  Family family() const { return impl_->family(); }
  Index order() const { return impl_->order(); }
  Index characteristic() const { return characteristic_; }
  Index zero() const { return 0; }
  Index one() const { return impl_->one(); }

  Index add(Index a, Index b) const { return impl_->add(a, b); }
  Index neg(Index a) const { return impl_->neg(a); }
  Index sub(Index a, Index b) const { return impl_->add(a, impl_->neg(b)); }
  Index mul(Index a, Index b) const { return impl_->mul(a, b); }
  Index pow(Index a, std::uint64_t e) const;
  // Sign-corrected k-fold sum of a.
  Index int_mul(std::int64_t k, Index a) const;
  // Unsigned variant for scalars beyond int64.
  Index int_mul_unsigned(std::uint64_t k, Index a) const;

  Element element(Index index) const;
  // All elements in ascending index order.
  std::vector<Element> elements() const;

  std::string describe() const { return impl_->describe(); }
  std::string format(Index a) const { return impl_->format(a); }

  const RingImpl& impl() const { return *impl_; }
  template <typename T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  bool operator==(const Ring& other) const;

 private:
  std::shared_ptr<const RingImpl> impl_;
  Index characteristic_;
};

class Element {
 public:
  Element(Ring ring, Index index);

  const Ring& ring() const { return ring_; }
  Index index() const { return index_; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b);

  Element pow(std::uint64_t e) const;
  Element int_mul(std::int64_t k) const;
  std::string to_string() const { return ring_.format(index_); }

 private:
  Ring ring_;
  Index index_;
};

enum class ArithOp { kAdd, kMul, kNeg, kPow, kIntMul };

// Uniform dispatch: add/mul take two elements, neg one; pow and int_mul take
// one element and use `scalar` as exponent or multiplier.
Element ring_arith(const Ring& ring, ArithOp op, std::span<const Element> args,
                   std::int64_t scalar = 0);

Ring make_zmod(Index n);
// Z/pZ tagged as a prime field; p must be prime.
Ring make_prime_field(Index p);
Ring make_product(std::vector<Ring> factors);

// Prime p when ring is GF(p) or Z/p with p prime.
std::optional<Index> prime_field_order(const Ring& ring);

class ZmodImpl final : public RingImpl {
 public:
  ZmodImpl(Index n, bool prime_field) : n_(n), prime_field_(prime_field) {}

  Family family() const override {
    return prime_field_ ? Family::kPrimeField : Family::kZmod;
  }
  Index order() const override { return n_; }
  Index one() const override { return 1; }
  Index add(Index a, Index b) const override;
  Index neg(Index a) const override { return a == 0 ? 0 : n_ - a; }
  Index mul(Index a, Index b) const override { return mul_mod(a, b, n_); }
  Index characteristic() const override { return n_; }
  std::optional<std::vector<Index>> additive_shape() const override {
    return std::vector<Index>{n_};
  }
  std::string structural_key() const override { return describe(); }
  std::string describe() const override;
  std::string format(Index a) const override { return std::to_string(a); }

  Index modulus() const { return n_; }

 private:
  Index n_;
  bool prime_field_;
};

class ProductImpl final : public RingImpl {
 public:
  explicit ProductImpl(std::vector<Ring> factors);

  Family family() const override { return Family::kProduct; }
  Index order() const override { return order_; }
  Index one() const override { return one_; }
  Index add(Index a, Index b) const override;
  Index neg(Index a) const override;
  Index mul(Index a, Index b) const override;
  Index characteristic() const override;
  std::optional<std::vector<Index>> additive_shape() const override;
  std::string structural_key() const override;
  std::string describe() const override;
  std::string format(Index a) const override;

  const std::vector<Ring>& factors() const { return factors_; }
  // Mixed radix, first factor least significant.
  std::vector<Index> decode(Index a) const;
  Index encode(std::span<const Index> parts) const;
  Index component(Index a, std::size_t k) const {
    return a / stride_[k] % factors_[k].order();
  }

 private:
  std::vector<Ring> factors_;
  std::vector<Index> stride_;
  Index order_;
  Index one_;
};

// Ring homomorphism between finite rings, not necessarily unital.
// Table homs are exhaustively verified; coordinate projections out of a
// product are homs by construction of the product ring.
class RingHom {
 public:
  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  bool unital() const { return unital_; }
  bool is_table() const { return !coordinate_; }
  // Empty for coordinate projections.
  const std::vector<Index>& table() const { return table_; }
  Index apply(Index a) const;
  Element operator()(const Element& a) const;
  std::string label() const { return label_; }

 private:
  friend RingHom make_hom(Ring, Ring, std::vector<Index>, std::string);
  friend RingHom make_coordinate_projection(const Ring&, std::size_t);
  RingHom(Ring source, Ring target) : source_(source), target_(target) {}

  Ring source_;
  Ring target_;
  std::vector<Index> table_;
  std::optional<std::size_t> coordinate_;
  bool unital_ = false;
  std::string label_;
};

struct HomReport {
  bool valid = true;
  // Name of the first violated law, empty when valid.
  std::string law;
  std::optional<std::pair<Index, Index>> witness;
};

// Verifies additivity, multiplicativity and table[0] = 0 over all pairs.
// Throws kHomInvalid naming the witness pair on failure.
RingHom make_hom(Ring source, Ring target, std::vector<Index> table,
                 std::string label = "@table");
HomReport verify_hom(const RingHom& h);
HomReport verify_hom_table(const Ring& source, const Ring& target,
                           std::span<const Index> table);
RingHom identity_hom(const Ring& ring);
// Projection of a product ring onto factor k. Any other ring is treated as a
// one-factor product, so k = 0 gives its identity.
RingHom make_coordinate_projection(const Ring& product, std::size_t k);

}  // namespace pring
