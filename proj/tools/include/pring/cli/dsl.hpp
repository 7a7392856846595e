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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pring/numeric.hpp"
#include "pring/poly_text.hpp"

namespace pring::cli {

// Byte range [begin, end) in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

struct ModuleSpec {
  enum class Kind { kZero, kFree, kCyclic };
  Kind kind = Kind::kZero;
  // Rank for kFree, cyclic order for kCyclic.
  Index n = 0;
  std::string table_file;
  Span span;
};

struct HomSpec {
  enum class Kind { kId, kScale0, kFile };
  Kind kind = Kind::kId;
  std::int64_t k = 0;
  std::string table_file;
  Span span;
};

// Generators as element indices of the ambient ring.
struct IdealSpec {
  std::vector<Index> generators;
  Span span;
};

struct ZmodNode {
  Index n;
};
struct GFNode {
  Index p;
};
struct QuotientNode {
  ExprPtr base;
  std::string poly;  // whitespace stripped
  PolyText terms;
  Span poly_span;
};
struct ProductNode {
  std::vector<ExprPtr> factors;
};
struct TrivNode {
  ExprPtr base;
  ModuleSpec module;
};
struct AmalgNode {
  ExprPtr a;
  ExprPtr b;
  HomSpec hom;
  IdealSpec ideal;
};
struct DupNode {
  ExprPtr a;
  IdealSpec ideal;
};

struct RingExpr {
  std::variant<ZmodNode, GFNode, QuotientNode, ProductNode, TrivNode,
               AmalgNode, DupNode>
      node;
  Span span;
};

// Grammar:
//   expr   := term ('*' term)*
//   term   := atom ('[x]/(' poly ')')*
//   atom   := 'Z/' nat | 'GF(' nat ')' | '(' expr ')'
//           | 'triv(' expr ',' module ')'
//           | 'amalg(' expr ',' expr ',' hom ',' ideal ')'
//           | 'dup(' expr ',' ideal ')'
//   module := 'zero' | 'free:' nat | 'Z/' nat ':' path
//   hom    := 'id' | 'scale0:' int | '@' path
//   ideal  := '(' nat (',' nat)* ')'
// Whitespace between tokens is ignored. Throws ParseError.
ExprPtr parse_ring_expr(std::string_view text);

// Canonical text; parse_ring_expr(print_ring_expr(e)) is structurally equal
// to e.
std::string print_ring_expr(const RingExpr& expr);

// Equality ignoring spans.
bool same_structure(const RingExpr& a, const RingExpr& b);

}  // namespace pring::cli
