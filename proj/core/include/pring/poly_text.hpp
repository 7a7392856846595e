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
#include <string>
#include <string_view>
#include <vector>

#include "pring/poly.hpp"

namespace pring {

// One signed monomial of polynomial text. Tuple coefficients such as
// "(1,-1,2,-2)" keep all entries; scalar coefficients have one entry.
struct PolyTerm {
  std::vector<std::int64_t> coeff;
  bool tuple = false;
  std::uint64_t exponent = 0;
  // Byte offset of the term in the enclosing input.
  std::size_t offset = 0;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

struct PolyText {
  std::vector<PolyTerm> terms;
  bool has_tuples() const;
  friend bool operator==(const PolyText&, const PolyText&) = default;
};

// Grammar: poly := ['-'] term (('+'|'-') term)*;
// term := coeff ['*'] 'x' ['^' nat] | coeff | 'x' ['^' nat];
// coeff := int | '(' int (',' int)* ')'. Whitespace is ignored.
// Offsets in errors are `base_offset` plus the position within `text`.
PolyText parse_poly_text(std::string_view text, std::size_t base_offset = 0);

// Scalar terms only; coefficients reduced mod p.
FpPoly to_fp_poly(const PolyText& text, std::uint64_t p);
FpPoly parse_fp_poly(std::string_view text, std::uint64_t p);

}  // namespace pring
