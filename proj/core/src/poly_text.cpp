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

#include "pring/poly_text.hpp"

#include <cctype>
#include <limits>

#include "pring/error.hpp"

namespace pring {
namespace {

class PolyLexer {
 public:
  PolyLexer(std::string_view text, std::size_t base)
      : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }
  std::size_t offset() {
    skip_ws();
    return base_ + pos_;
  }
  [[noreturn]] void fail(std::vector<std::string> expected,
                         const std::string& detail = "") {
    throw ParseError(offset(), std::move(expected), detail);
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail({"digit"});
    }
    std::size_t start = base_ + pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError(start, {}, "integer literal overflows 64 bits");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_int() {
    bool negative = accept('-');
    if (!negative) accept('+');
    std::size_t start = offset();
    std::uint64_t mag = nat();
    constexpr std::uint64_t kMax = std::numeric_limits<std::int64_t>::max();
    if (mag > kMax + (negative ? 1 : 0)) {
      throw ParseError(start, {}, "integer literal overflows int64");
    }
    if (negative) {
      return mag == kMax + 1 ? std::numeric_limits<std::int64_t>::min()
                             : -static_cast<std::int64_t>(mag);
    }
    return static_cast<std::int64_t>(mag);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::int64_t negate_checked(std::int64_t v, std::size_t offset) {
  if (v == std::numeric_limits<std::int64_t>::min()) {
    throw ParseError(offset, {}, "integer literal overflows int64");
  }
  return -v;
}

PolyTerm parse_term(PolyLexer& lex, bool negative) {
  PolyTerm term;
  term.offset = lex.offset();
  bool have_coeff = false;
  char c = lex.peek();
  if (c == '(') {
    lex.accept('(');
    term.tuple = true;
    term.coeff.push_back(lex.signed_int());
    while (lex.accept(',')) term.coeff.push_back(lex.signed_int());
    lex.expect(')');
    have_coeff = true;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t start = lex.offset();
    std::uint64_t v = lex.nat();
    if (v > static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(start, {}, "integer literal overflows int64");
    }
    term.coeff.push_back(static_cast<std::int64_t>(v));
    have_coeff = true;
  } else if (c != 'x') {
    lex.fail({"integer", "'x'", "'('"});
  }
  if (!have_coeff) term.coeff.push_back(1);
  bool star = have_coeff && lex.accept('*');
  if (lex.peek() == 'x') {
    lex.accept('x');
    term.exponent = 1;
    if (lex.accept('^')) term.exponent = lex.nat();
  } else if (star) {
    lex.fail({"'x'"});
  }
  if (negative) {
    for (auto& v : term.coeff) v = negate_checked(v, term.offset);
  }
  return term;
}

}  // namespace

bool PolyText::has_tuples() const {
  for (const auto& t : terms) {
    if (t.tuple) return true;
  }
  return false;
}

PolyText parse_poly_text(std::string_view text, std::size_t base_offset) {
  PolyLexer lex(text, base_offset);
  PolyText out;
  bool negative = lex.accept('-');
  out.terms.push_back(parse_term(lex, negative));
  while (!lex.at_end()) {
    if (lex.accept('+')) {
      negative = false;
    } else if (lex.accept('-')) {
      negative = true;
    } else {
      lex.fail({"'+'", "'-'", "end of polynomial"});
    }
    out.terms.push_back(parse_term(lex, negative));
  }
  return out;
}

FpPoly to_fp_poly(const PolyText& text, std::uint64_t p) {
  FpPoly acc(p);
  for (const auto& term : text.terms) {
    if (term.tuple && term.coeff.size() != 1) {
      throw ParseError(term.offset, {"scalar coefficient"},
                       "tuple coefficient over a prime field");
    }
    if (term.exponent > (std::uint64_t{1} << 24)) {
      throw ParseError(term.offset, {}, "exponent too large");
    }
    acc = acc + FpPoly::monomial(p, reduce_signed(term.coeff[0], p),
                                 static_cast<std::size_t>(term.exponent));
  }
  return acc;
}

FpPoly parse_fp_poly(std::string_view text, std::uint64_t p) {
  return to_fp_poly(parse_poly_text(text), p);
}

}  // namespace pring
