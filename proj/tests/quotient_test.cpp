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

#include <random>

#include "oracles.hpp"
#include "pring/decision.hpp"
#include "pring/error.hpp"
#include "pring/quotient.hpp"

namespace pring {
namespace {

FpPoly P(std::uint64_t p, std::vector<std::int64_t> c) {
  return FpPoly::from_signed(p, c);
}

std::vector<RingHom> projections(const Ring& base) {
  std::vector<RingHom> out;
  std::size_t n = 1;
  if (const auto* prod = base.as<ProductImpl>()) n = prod->factors().size();
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(make_coordinate_projection(base, k));
  return out;
}

TEST(Quotient, FieldOfFour) {
  Ring r = make_quotient(2, P(2, {1, 1, 1}));
  EXPECT_EQ(r.order(), 4u);
  for (Index a = 1; a < 4; ++a) {
    bool unit = false;
    for (Index b = 1; b < 4; ++b) unit = unit || r.mul(a, b) == 1;
    EXPECT_TRUE(unit) << a;
  }
}

TEST(Quotient, SplitQuadraticIsTwoCopies) {
  Ring r = make_quotient(2, P(2, {0, 1, 1}));
  Ring f2 = make_prime_field(2);
  Ring target = make_product({f2, f2});
  const auto* q = r.as<QuotientImpl>();
  std::vector<Index> table(4);
  for (Index g = 0; g < 4; ++g) {
    FpPoly res = q->residue(g);
    table[g] = eval(res, 0) + 2 * eval(res, 1);
  }
  RingHom h = make_hom(r, target, table);
  EXPECT_TRUE(h.unital());
  std::set<Index> image(table.begin(), table.end());
  EXPECT_EQ(image.size(), 4u);
}

TEST(Quotient, LinearModulusIsPrimeField) {
  for (std::uint64_t p : {2u, 3u, 7u}) {
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
      Ring r = make_quotient(p, P(p, {-a, 1}));
      EXPECT_EQ(r.order(), p);
      std::vector<Index> id(p);
      for (Index i = 0; i < p; ++i) id[i] = i;
      EXPECT_TRUE(verify_hom_table(r, make_prime_field(p), id).valid);
    }
  }
}

TEST(Quotient, MultiplicationMatchesNaive) {
  FpPoly f = P(3, {2, 0, 1, 1});
  Ring r = make_quotient(3, f);
  const auto* q = r.as<QuotientImpl>();
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < r.order(); ++b) {
      auto want = oracle::rem(3, oracle::mul(3, q->residue(a).coeffs(),
                                             q->residue(b).coeffs()),
                              f.coeffs());
      EXPECT_EQ(q->residue(r.mul(a, b)).coeffs(), want);
    }
}

TEST(Quotient, Rejections) {
  EXPECT_THROW(make_quotient(4, P(4, {0, 1})), Error);
  EXPECT_THROW(make_quotient(3, P(3, {2})), Error);
}

class Seventeen : public ::testing::Test {
 protected:
  Ring f17 = make_prime_field(17);
  Ring base = make_product({f17, f17, f17, f17});
  PolyOverRing f() const {
    const auto* prod = base.as<ProductImpl>();
    Index c0[] = {1, 16, 2, 15};
    Index c2[] = {1, 1, 1, 1};
    return PolyOverRing(base, {prod->encode(c0), 0, prod->encode(c2)});
  }
};

TEST_F(Seventeen, Reductions) {
  EXPECT_EQ(reduce_mod_maximal(f(), make_coordinate_projection(base, 2)),
            P(17, {2, 0, 1}));
  EXPECT_EQ(reduce_mod_maximal(f(), make_coordinate_projection(base, 0)),
            P(17, {1, 0, 1}));
  EXPECT_TRUE(reduce_mod_maximal(PolyOverRing(base),
                                 make_coordinate_projection(base, 1))
                  .is_zero());
}

TEST_F(Seventeen, QuotientIsTooLargeToMaterialize) {
  auto pr = projections(base);
  EXPECT_THROW(make_quotient_over_pring(base, f(), pr), Error);
}

TEST(QuotientOverPRing, TwoSplitComponents) {
  Ring f2 = make_prime_field(2);
  Ring base = make_product({f2, f2});
  PolyOverRing f(base, {0, 3, 3});
  auto pr = projections(base);
  PolyQuotient q = make_quotient_over_pring(base, f, pr);
  EXPECT_EQ(q.ring.order(), 16u);
  EXPECT_TRUE(oracle::ring_is_p_ring(q.ring, 2));
  EXPECT_TRUE(is_p_ring_oracle(q.ring, 2).verdict);
}

TEST(QuotientOverPRing, SingleFieldBase) {
  Ring f2 = make_prime_field(2);
  PolyOverRing f(f2, {1, 1, 1});
  auto pr = projections(f2);
  PolyQuotient q = make_quotient_over_pring(f2, f, pr);
  EXPECT_EQ(q.ring.order(), 4u);
  EXPECT_TRUE(q.ring == make_quotient(2, P(2, {1, 1, 1})));
}

TEST(QuotientOverPRing, IrreducibleComponentBreaksPRing) {
  Ring f2 = make_prime_field(2);
  Ring base = make_product({f2, f2});
  PolyOverRing f(base, {1, 3, 3});  // f1 = x^2+x+1, f2 = x^2+x
  auto pr = projections(base);
  PolyQuotient q = make_quotient_over_pring(base, f, pr);
  EXPECT_EQ(q.reductions[0], P(2, {1, 1, 1}));
  EXPECT_FALSE(is_p_ring_oracle(q.ring, 2).verdict);
  EXPECT_FALSE(oracle::ring_is_p_ring(q.ring, 2));
}

TEST(QuotientOverPRing, ZeroReductionUnsupported) {
  Ring f2 = make_prime_field(2);
  Ring base = make_product({f2, f2});
  PolyOverRing f(base, {2, 2});  // vanishes in component 1
  auto pr = projections(base);
  try {
    make_quotient_over_pring(base, f, pr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsupportedDegenerate);
  }
}

// g(x)^p = g(x^p) over a p-ring.
TEST(PolyOverRing, Frobenius) {
  std::mt19937_64 rng(11);
  Ring f2 = make_prime_field(2);
  for (Ring r : {f2, make_prime_field(3), make_product({f2, f2})}) {
    std::uint64_t p = r.characteristic();
    for (int t = 0; t < 50; ++t) {
      std::vector<Index> c(rng() % 5 + 1);
      for (auto& v : c) v = rng() % r.order();
      PolyOverRing g(r, c);
      EXPECT_EQ(g.pow(p), g.compose_xpow(p)) << g.to_string();
    }
  }
}

TEST(PolyOverRing, FrobeniusFailsOffPRings) {
  Ring z4 = make_zmod(4);
  PolyOverRing g(z4, {2, 1});
  EXPECT_FALSE(g.pow(2) == g.compose_xpow(2));
}

}  // namespace
}  // namespace pring
