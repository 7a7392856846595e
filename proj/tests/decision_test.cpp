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
#include "pring/decision.hpp"
#include "pring/error.hpp"
#include "pring/limits.hpp"

namespace pring {
namespace {

Ring F(Index p) { return make_prime_field(p); }

std::set<Index> as_set(const IdealDesc& i) {
  auto e = i.elements();
  return {e.begin(), e.end()};
}

TEST(PRingOracle, Examples) {
  EXPECT_TRUE(is_p_ring_oracle(make_product({F(2), F(2)}), 2).verdict);
  DecisionReport z4 = is_p_ring_oracle(make_zmod(4), 2);
  EXPECT_FALSE(z4.verdict);
  ASSERT_TRUE(z4.witness.has_value());
  EXPECT_EQ(*z4.witness, 2u);
  for (Index p : {2u, 3u, 5u, 7u, 11u, 13u})
    EXPECT_TRUE(is_p_ring_oracle(F(p), p).verdict);
  EXPECT_EQ(is_p_ring_oracle(F(3), 3).method, Method::kOracle);
}

TEST(VnrOracle, Examples) {
  EXPECT_TRUE(is_vnr_oracle(make_zmod(6)).verdict);
  DecisionReport z4 = is_vnr_oracle(make_zmod(4));
  EXPECT_FALSE(z4.verdict);
  EXPECT_EQ(*z4.witness, 2u);
}

TEST(VnrCertificate, PRingsAreRegular) {
  for (Index p : {2u, 3u, 5u}) {
    Ring r = make_product({F(p), F(p)});
    for (Index a = 0; a < r.order(); ++a) {
      Index b = vnr_certificate(r, p, a);
      EXPECT_EQ(r.mul(r.mul(a, a), b), a);
    }
  }
}

TEST(PIdeal, Examples) {
  Ring z60 = make_zmod(60);
  EXPECT_TRUE(is_p_ideal(IdealDesc::zmod_multiples(z60, 20), 3).verdict);
  for (Index p : {2u, 3u, 5u, 7u})
    EXPECT_TRUE(is_p_ideal(IdealDesc::zero(z60), p).verdict);
  Ring z6 = make_zmod(6);
  EXPECT_TRUE(is_p_ideal(IdealDesc::zmod_multiples(z6, 3), 2).verdict);
  EXPECT_FALSE(is_p_ideal(IdealDesc::zmod_multiples(z60, 30), 2).verdict);
}

TEST(Ideals, Counts) {
  EXPECT_EQ(enumerate_ideals_oracle(make_zmod(60)).size(), 12u);
  EXPECT_EQ(enumerate_ideals_oracle(make_product({F(2), F(2)})).size(), 4u);
  for (Ring k : {F(5), F(7), make_quotient(2, FpPoly(2, {1, 1, 1}))}) {
    auto ideals = enumerate_ideals_oracle(k);
    ASSERT_EQ(ideals.size(), 2u);
    EXPECT_TRUE(ideals[0].is_zero());
    EXPECT_EQ(ideals[1].size(), k.order());
  }
}

TEST(Ideals, MatchSubsetSearch) {
  Ring f2 = F(2);
  std::vector<Ring> rings = {
      make_zmod(12), make_zmod(16), make_product({f2, f2, f2}),
      make_product({make_zmod(4), f2}), make_quotient(2, FpPoly(2, {0, 0, 1})),
      make_quotient(3, FpPoly(3, {0, 0, 1})),
      make_trivial_extension(f2, ModuleDesc::free(f2, 2))};
  for (const Ring& r : rings) {
    std::set<std::vector<Index>> got;
    for (const auto& i : enumerate_ideals_oracle(r)) got.insert(i.elements());
    EXPECT_EQ(got, oracle::ideals_by_subsets(r)) << r.describe();
  }
}

TEST(Ideals, SumAndCheck) {
  Ring z12 = make_zmod(12);
  auto four = IdealDesc::zmod_multiples(z12, 4).elements();
  auto six = IdealDesc::zmod_multiples(z12, 6).elements();
  EXPECT_EQ(ideal_sum(z12, four, six),
            IdealDesc::zmod_multiples(z12, 2).elements());
  std::vector<Index> bad = {0, 3};
  EXPECT_TRUE(check_ideal(z12, bad).has_value());
  EXPECT_THROW(IdealDesc::extensional(z12, bad), Error);
  EXPECT_EQ(IdealDesc::zmod_multiples(make_zmod(60), 20).to_string(),
            "20Z/60Z");
}

TEST(ZmodPIdeals, Sixty) {
  auto three = p_ideals_of_zmod(60, 3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[1].to_string(), "20Z/60Z");
  auto five = p_ideals_of_zmod(60, 5);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[1].to_string(), "12Z/60Z");
  auto two = p_ideals_of_zmod(60, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].to_string(), "(0)");
}

TEST(ZmodPIdeals, MatchesDivisorOracle) {
  for (Index n = 2; n <= 120; ++n)
    for (Index p : {2u, 3u, 5u, 7u}) {
      auto got = p_ideals_of_zmod(n, p);
      auto want = oracle::zmod_p_ideals(n, p);
      ASSERT_EQ(got.size(), want.size()) << n << " " << p;
      std::set<std::set<Index>> g, w(want.begin(), want.end());
      for (const auto& i : got) g.insert(as_set(i));
      EXPECT_EQ(g, w) << n << " " << p;
    }
}

TEST(QuotientPIdeal, Examples) {
  EXPECT_TRUE(quotient_has_p_ideal(2, FpPoly(2, {0, 1, 1})).verdict);
  EXPECT_FALSE(quotient_has_p_ideal(2, FpPoly(2, {1, 0, 1})).verdict);
  EXPECT_FALSE(quotient_has_p_ideal(2, FpPoly(2, {1, 1, 1})).verdict);
  EXPECT_EQ(quotient_has_p_ideal(2, FpPoly(2, {1, 1})).method,
            Method::kTheorem);
}

TEST(PolyQuotientPRing, Examples) {
  EXPECT_TRUE(
      pring_poly_quotient_is_pring(F(3), PolyOverRing(F(3), {0, 2, 1}), 3)
          .verdict);
  Ring b = make_product({F(2), F(2)});
  DecisionReport r =
      pring_poly_quotient_is_pring(b, PolyOverRing(b, {1, 3, 3}), 2);
  EXPECT_FALSE(r.verdict);
  EXPECT_NE(r.witness_text.find("1"), std::string::npos);
}

TEST(PolyQuotientPRing, SeventeenExample) {
  Ring f17 = F(17);
  Ring base = make_product({f17, f17, f17, f17});
  const auto* prod = base.as<ProductImpl>();
  Index c0[] = {1, 16, 2, 15};
  Index c2[] = {1, 1, 1, 1};
  PolyOverRing f(base, {prod->encode(c0), 0, prod->encode(c2)});
  DecisionReport r = pring_poly_quotient_is_pring(base, f, 17);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(*r.detail("distinct_roots"), "8");
  EXPECT_EQ(*r.detail("order"), "6975757441");
  EXPECT_EQ(r.method, Method::kTheorem);
}

TEST(McCoy, SmallPowers) {
  Ring f2 = F(2);
  McCoyDecomposition d = mccoy_decompose(make_product({f2, f2}), 2);
  EXPECT_EQ(d.n, 2u);
  EXPECT_EQ(d.order, 4u);
  EXPECT_EQ(d.ideal_count, 4u);
  ASSERT_TRUE(d.iso.has_value());
  EXPECT_TRUE(verify_hom(*d.iso).valid);
  McCoyDecomposition e = mccoy_decompose(F(7), 7);
  EXPECT_EQ(e.n, 1u);
  EXPECT_EQ(e.ideal_count, 2u);
}

TEST(McCoy, AmalgamationHasThreeMaximalIdeals) {
  Ring a = make_product({F(2), F(2)});
  Ring b = make_zmod(6);
  Index gens[] = {3};
  Ring r = make_amalgamation(AmalgDesc{a, b, make_scale0_hom(a, b, 3),
                                       IdealDesc::generated_by(b, gens)});
  McCoyDecomposition d = mccoy_decompose(r, 2);
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.ideal_count, 8u);
}

TEST(McCoy, RejectsNonPRing) {
  try {
    mccoy_decompose(make_zmod(4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPreconditionViolated);
  }
}

TEST(McCoy, StructuralRouteAboveOracleGuard) {
  Ring f3 = F(3);
  Ring r = make_product({f3, f3, f3, f3, f3, f3});  // 729 elements
  McCoyDecomposition d = decompose_pring(r, 3);
  EXPECT_EQ(d.method, Method::kTheorem);
  EXPECT_EQ(d.n, 6u);
  EXPECT_EQ(d.ideal_count, 64u);
}

TEST(AmalgPRing, Examples) {
  Ring a = make_product({F(2), F(2)});
  Ring b = make_zmod(6);
  Index gens[] = {3};
  AmalgDesc good{a, b, make_scale0_hom(a, b, 3),
                 IdealDesc::generated_by(b, gens)};
  EXPECT_TRUE(amalgamation_is_pring(good, 2).verdict);
  Ring z4 = make_zmod(4);
  AmalgDesc bad{z4, z4, identity_hom(z4), IdealDesc::zmod_multiples(z4, 2)};
  EXPECT_FALSE(amalgamation_is_pring(bad, 2).verdict);
  for (const auto& i : enumerate_ideals_oracle(a)) {
    AmalgDesc dup{a, a, identity_hom(a), i};
    EXPECT_TRUE(amalgamation_is_pring(dup, 2).verdict) << i.to_string();
  }
}

TEST(TrivialExtCheck, Examples) {
  Ring f2 = F(2);
  EXPECT_TRUE(
      trivial_ext_check(f2, ModuleDesc::zero(f2), 2, CheckMode::kPRing).verdict);
  EXPECT_FALSE(trivial_ext_check(f2, ModuleDesc::free(f2, 1), 2,
                                 CheckMode::kPRing)
                   .verdict);
  Ring z6 = make_zmod(6);
  EXPECT_TRUE(
      trivial_ext_check(z6, ModuleDesc::zero(z6), 2, CheckMode::kVnr).verdict);
}

TEST(Dispatch, StructuralMatchesOracle) {
  Ring f2 = F(2);
  std::vector<Ring> rings = {
      make_zmod(6), make_zmod(4), F(3), make_product({f2, F(3)}),
      make_product({f2, f2}), make_quotient(3, FpPoly(3, {0, 2, 1})),
      make_quotient(2, FpPoly(2, {1, 0, 1})),
      make_trivial_extension(F(3), ModuleDesc::zero(F(3)))};
  for (const Ring& r : rings) {
    for (Index p : {2u, 3u}) {
      EXPECT_EQ(is_p_ring(r, p).verdict, oracle::ring_is_p_ring(r, p))
          << r.describe() << " p=" << p;
    }
    EXPECT_EQ(is_vnr(r).verdict, oracle::ring_is_vnr(r)) << r.describe();
  }
}

TEST(Guards, OracleGuardEnforced) {
  ScopedLimits guard(Limits{4096, 16});
  try {
    enumerate_ideals_oracle(make_zmod(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSizeGuard);
  }
}

}  // namespace
}  // namespace pring
