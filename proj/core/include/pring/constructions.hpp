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
#include <string>
#include <vector>

#include "pring/ideal.hpp"
#include "pring/ring.hpp"

namespace pring {

// Finite A-module whose additive group is Z/m_0 x Z/m_1 x ... (mixed radix,
// first component least significant) with an explicit action table.
class ModuleDesc {
 public:
  static ModuleDesc zero(const Ring& base);
  // A^rank with the componentwise regular action. Needs a ring whose index
  // encoding has an additive shape.
  static ModuleDesc free(const Ring& base, unsigned rank);
  // Z/m with action[a + |A| * x] = a.x.
  static ModuleDesc cyclic(const Ring& base, Index m, std::vector<Index> action,
                           std::string label = "table");
  // General form; action[a + |A| * x] = a.x. All module laws are checked.
  static ModuleDesc from_table(const Ring& base, std::vector<Index> shape,
                               std::vector<Index> action, std::string label);

  const Ring& base() const { return base_; }
  Index order() const { return order_; }
  const std::vector<Index>& shape() const { return shape_; }
  Index add(Index x, Index y) const;
  Index neg(Index x) const;
  Index act(Index a, Index x) const { return action_[a + base_.order() * x]; }
  std::string describe() const { return label_; }
  std::string format(Index x) const;

 private:
  ModuleDesc(Ring base, std::vector<Index> shape, std::vector<Index> action,
             std::string label);

  Ring base_;
  std::vector<Index> shape_;
  std::vector<Index> action_;
  Index order_;
  std::string label_;
  // Set for free modules so elements print as tuples of ring elements.
  unsigned free_rank_ = 0;
};

// Everything that defines the amalgamation of A with B along J.
struct AmalgDesc {
  Ring a;
  Ring b;
  RingHom hom;
  IdealDesc j;
};

// Throws kIdealInvalid or kIdentityConditionViolated (with witness) unless
// hom: A -> B, J is an ideal of B and f(1)(f(a)+j) = f(a)+j for all a, j.
void validate_amalgamation(const AmalgDesc& desc);

class TrivialExtImpl final : public RingImpl {
 public:
  TrivialExtImpl(Ring a, ModuleDesc e);

  Family family() const override { return Family::kTrivialExt; }
  Index order() const override { return order_; }
  Index one() const override { return a_.one(); }
  Index add(Index x, Index y) const override;
  Index neg(Index x) const override;
  Index mul(Index x, Index y) const override;
  std::optional<std::vector<Index>> additive_shape() const override;
  std::string describe() const override;
  std::string format(Index x) const override;

  const Ring& base() const { return a_; }
  const ModuleDesc& module() const { return e_; }
  // Pair encoding, A-part least significant.
  Index encode(Index a, Index e) const { return a + a_.order() * e; }

 private:
  Ring a_;
  ModuleDesc e_;
  Index order_;
};

class AmalgamationImpl final : public RingImpl {
 public:
  explicit AmalgamationImpl(AmalgDesc desc);

  Family family() const override { return Family::kAmalgamation; }
  Index order() const override { return order_; }
  Index one() const override { return desc_.a.one(); }
  Index add(Index x, Index y) const override;
  Index neg(Index x) const override;
  Index mul(Index x, Index y) const override;
  std::string describe() const override;
  std::string format(Index x) const override;

  const AmalgDesc& desc() const { return desc_; }
  Index a_part(Index x) const { return x % desc_.a.order(); }
  Index j_part(Index x) const { return j_elems_[x / desc_.a.order()]; }
  // The B-coordinate f(a) + j.
  Index b_part(Index x) const;
  // (a, j) to index; j must lie in J.
  Index encode(Index a, Index j) const;

 private:
  AmalgDesc desc_;
  std::vector<Index> j_elems_;
  // B index -> position in j_elems_, or npos.
  std::vector<Index> j_pos_;
  Index order_;
};

Ring make_trivial_extension(const Ring& a, const ModuleDesc& e);
Ring make_amalgamation(const AmalgDesc& desc);
// Amalgamated duplication: of A with itself along I via the identity.
Ring make_duplication(const Ring& a, const IdealDesc& i);

// (a, f(a)+j) -> a, verified.
RingHom amalgamation_projection(const Ring& amalgamation);

// a -> (k * a_0) * 1_B, where a_0 is the first product coordinate of a (or a
// itself when A is Z/n). Verified; not necessarily unital.
RingHom make_scale0_hom(const Ring& a, const Ring& b, std::int64_t k);

}  // namespace pring
