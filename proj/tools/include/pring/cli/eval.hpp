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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pring/cli/dsl.hpp"
#include "pring/constructions.hpp"
#include "pring/poly.hpp"
#include "pring/quotient.hpp"
#include "pring/ring.hpp"

namespace pring::cli {

// GF(p)[x]/(f).
struct PrimeQuotientInfo {
  std::uint64_t p;
  FpPoly f;
};

// R[x]/(f) over a p-ring R, kept as its reductions f_j.
struct PringQuotientInfo {
  Ring base;
  PolyOverRing f;
  std::uint64_t p;
  std::vector<FpPoly> reductions;
};

struct TrivInfo {
  Ring a;
  ModuleDesc e;
};

// Result of evaluating a ring expression. `ring` is empty when the value is
// too large to materialize; the construction data is still available to the
// fast paths.
struct Evaluated {
  std::optional<Ring> ring;
  std::string text;
  std::optional<PrimeQuotientInfo> prime_quotient;
  std::optional<PringQuotientInfo> pring_quotient;
  std::optional<AmalgDesc> amalg;
  std::optional<TrivInfo> triv;
  std::string size_guard_note;

  // Order, computed without materializing when needed. nullopt on overflow.
  std::optional<Index> order() const;
};

// Evaluates an expression. Relative table-file paths resolve against
// `base_dir`. Throws pring::Error (ParseError for span-carrying semantic
// errors).
Evaluated evaluate(const RingExpr& expr,
                   const std::filesystem::path& base_dir = ".");

// "src -> dst" records, one per line; '#' starts a comment. Every source
// index in [0, n) must appear exactly once.
std::vector<Index> read_table_file(const std::filesystem::path& path, Index n);

}  // namespace pring::cli
