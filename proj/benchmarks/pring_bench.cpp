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

#include <benchmark/benchmark.h>

#include "pring/decision.hpp"
#include "pring/poly.hpp"

namespace {

using namespace pring;

Ring boolean_power(unsigned n) {
  std::vector<Ring> f(n, make_prime_field(2));
  return n == 1 ? f[0] : make_product(f);
}

void BM_PRingOracle(benchmark::State& state) {
  Ring r = boolean_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_p_ring_oracle(r, 2));
  state.SetItemsProcessed(state.iterations() * r.order());
}
BENCHMARK(BM_PRingOracle)->DenseRange(4, 12, 4);

void BM_VnrOracle(benchmark::State& state) {
  Ring r = make_zmod(static_cast<Index>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_vnr_oracle(r));
}
BENCHMARK(BM_VnrOracle)->Arg(30)->Arg(210)->Arg(2310);

void BM_EnumerateIdeals(benchmark::State& state) {
  Ring r = boolean_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals_oracle(r));
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ZmodPIdealsFastPath(benchmark::State& state) {
  for (auto _ : state) {
    for (Index n = 2; n <= 200; ++n)
      benchmark::DoNotOptimize(p_ideals_of_zmod(n, 3));
  }
}
BENCHMARK(BM_ZmodPIdealsFastPath);

void BM_Factor(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  // (x^p - x) * (x^2 + 1) * x^3 + 1: mixes split, repeated and irreducible parts.
  FpPoly f = FpPoly::frobenius_fixed(p) * FpPoly::from_signed(p, {1, 0, 1}) *
                 FpPoly::monomial(p, 1, 3) +
             FpPoly::constant(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(factor_irreducible(f));
}
BENCHMARK(BM_Factor)->Arg(3)->Arg(17)->Arg(101);

void BM_Roots(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  FpPoly f = FpPoly::frobenius_fixed(p) * FpPoly::from_signed(p, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(roots_with_multiplicity(f));
}
BENCHMARK(BM_Roots)->Arg(17)->Arg(257)->Arg(1009);

void BM_McCoy(benchmark::State& state) {
  Ring r = boolean_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mccoy_decompose(r, 2));
}
BENCHMARK(BM_McCoy)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
