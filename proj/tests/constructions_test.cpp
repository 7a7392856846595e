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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pring/constructions.hpp"
#include "pring/decision.hpp"
#include "pring/error.hpp"

namespace pring {
namespace {

Ring F(Index p) { return make_prime_field(p); }

TEST(TrivialExt, SquareZeroPart) {
  Ring a = F(2);
  Ring r = make_trivial_extension(a, ModuleDesc::free(a, 1));
  EXPECT_EQ(r.order(), 4u);
  const auto* t = r.as<TrivialExtImpl>();
  Index e = t->encode(0, 1);
  EXPECT_EQ(r.mul(e, e), t->encode(0, 0));
}

TEST(TrivialExt, ZeroModuleIsBase) {
  for (Ring a : {F(3), make_zmod(6), make_product({F(2), F(2)})}) {
    Ring r = make_trivial_extension(a, ModuleDesc::zero(a));
    ASSERT_EQ(r.order(), a.order());
    std::vector<Index> id(a.order());
    for (Index i = 0; i < a.order(); ++i) id[i] = i;
    EXPECT_TRUE(verify_hom_table(a, r, id).valid);
  }
}

TEST(TrivialExt, CyclicModuleLawsChecked) {
  Ring a = make_zmod(4);
  // Z/2 as a Z/4-module: a.x = (a mod 2) x.
  std::vector<Index> action(8);
  for (Index x = 0; x < 2; ++x)
    for (Index s = 0; s < 4; ++s) action[s + 4 * x] = (s * x) % 2;
  ModuleDesc e = ModuleDesc::cyclic(a, 2, action);
  EXPECT_EQ(make_trivial_extension(a, e).order(), 8u);
  action[1 + 4 * 1] = 0;  // breaks 1.x = x
  EXPECT_THROW(ModuleDesc::cyclic(a, 2, action), Error);
}

Ring scale_three_amalgamation() {
  Ring a = make_product({F(2), F(2)});
  Ring b = make_zmod(6);
  Index gens[] = {3};
  return make_amalgamation(AmalgDesc{a, b, make_scale0_hom(a, b, 3),
                                     IdealDesc::generated_by(b, gens)});
}

TEST(Amalgamation, ScaleThreeOverZ6) {
  Ring r = scale_three_amalgamation();
  EXPECT_EQ(r.order(), 8u);
  EXPECT_TRUE(oracle::ring_is_p_ring(r, 2));
  EXPECT_TRUE(is_p_ring_oracle(r, 2).verdict);
}

TEST(Amalgamation, ZeroIdealIsBase) {
  Ring a = make_product({F(2), F(2)});
  Ring b = make_zmod(6);
  Ring r = make_amalgamation(
      AmalgDesc{a, b, make_scale0_hom(a, b, 3), IdealDesc::zero(b)});
  EXPECT_EQ(r.order(), a.order());
  RingHom pr = amalgamation_projection(r);
  EXPECT_TRUE(verify_hom(pr).valid);
  std::set<Index> image(pr.table().begin(), pr.table().end());
  EXPECT_EQ(image.size(), a.order());
}

TEST(Amalgamation, ZmodFourDuplication) {
  Ring z4 = make_zmod(4);
  Ring r = make_amalgamation(AmalgDesc{z4, z4, identity_hom(z4),
                                       IdealDesc::zmod_multiples(z4, 2)});
  EXPECT_EQ(r.order(), 8u);
  EXPECT_FALSE(oracle::ring_is_p_ring(r, 2));
  const auto* impl = r.as<AmalgamationImpl>();
  Index x = impl->encode(1, 2);  // (1, 3)
  Index sq = r.mul(x, x);
  EXPECT_EQ(impl->a_part(sq), 1u);
  EXPECT_EQ(impl->b_part(sq), 1u);
}

TEST(Amalgamation, ProjectionIsSurjectiveHom) {
  Ring r = scale_three_amalgamation();
  RingHom pr = amalgamation_projection(r);
  EXPECT_TRUE(verify_hom(pr).valid);
  std::set<Index> image(pr.table().begin(), pr.table().end());
  EXPECT_EQ(image.size(), 4u);
}

TEST(Amalgamation, RejectsBadInputs) {
  Ring a = make_product({F(2), F(2)});
  Ring b = make_zmod(6);
  Ring z5 = make_zmod(5);
  try {
    make_amalgamation(AmalgDesc{a, b, make_scale0_hom(a, b, 3),
                                IdealDesc::zero(z5)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRingMismatch);
  }
  // J = (2) in Z/6: f(1) = 3 does not act as identity on f(a) + J.
  Index gens[] = {2};
  try {
    make_amalgamation(AmalgDesc{a, b, make_scale0_hom(a, b, 3),
                                IdealDesc::generated_by(b, gens)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIdentityConditionViolated);
  }
}

TEST(Duplication, Examples) {
  Ring a = make_product({F(2), F(2)});
  std::vector<Index> i = {0, 1};  // F_2 x {0}
  Ring d = make_duplication(a, IdealDesc::extensional(a, i));
  EXPECT_EQ(d.order(), 8u);
  EXPECT_TRUE(oracle::ring_is_p_ring(d, 2));
  Ring z4 = make_zmod(4);
  EXPECT_EQ(make_duplication(z4, IdealDesc::zero(z4)).order(), 4u);
  EXPECT_FALSE(oracle::ring_is_p_ring(
      make_duplication(z4, IdealDesc::zmod_multiples(z4, 2)), 2));
}

}  // namespace
}  // namespace pring
