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

#include "pring/cli/dsl.hpp"

#include <cctype>
#include <limits>

#include "pring/error.hpp"

namespace pring::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'*'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
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

  // Keyword followed by an optional required punctuation, e.g. "GF" "(".
  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(
                                    text_[after])) &&
        std::isalpha(static_cast<unsigned char>(word.back()))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected,
                         const std::string& detail = "") {
    skip_ws();
    throw ParseError(pos_, std::move(expected), detail);
  }

  Index nat() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail({"natural number"});
    }
    std::size_t start = pos_;
    Index v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Index d = static_cast<Index>(text_[pos_] - '0');
      if (v > (std::numeric_limits<Index>::max() - d) / 10) {
        throw ParseError(start, {}, "integer literal overflows 64 bits");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::int64_t integer() {
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    Index mag = nat();
    constexpr Index kMax = std::numeric_limits<std::int64_t>::max();
    if (mag > kMax + (negative ? 1 : 0)) {
      throw ParseError(start, {}, "integer literal overflows int64");
    }
    if (negative && mag == kMax + 1) {
      return std::numeric_limits<std::int64_t>::min();
    }
    return negative ? -static_cast<std::int64_t>(mag)
                    : static_cast<std::int64_t>(mag);
  }

  // Raw text up to the next top-level ',' or ')'.
  std::string path() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
      ++pos_;
    }
    std::string out(text_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
      out.pop_back();
    }
    if (out.empty()) {
      pos_ = start;
      fail({"file path"});
    }
    return out;
  }

  ExprPtr make(RingExpr e) { return std::make_shared<const RingExpr>(std::move(e)); }

  ExprPtr expr() {
    skip_ws();
    std::size_t start = pos_;
    ExprPtr first = term();
    if (peek() != '*') return first;
    ProductNode prod{{first}};
    while (accept('*')) prod.factors.push_back(term());
    return make({std::move(prod), {start, pos_}});
  }

  ExprPtr term() {
    skip_ws();
    std::size_t start = pos_;
    ExprPtr e = atom();
    while (peek() == '[') {
      accept('[');
      if (!accept_word("x")) fail({"'x'"});
      expect(']');
      expect('/');
      expect('(');
      skip_ws();
      std::size_t poly_start = pos_;
      int depth = 0;
      while (pos_ < text_.size() && !(depth == 0 && text_[pos_] == ')')) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (pos_ >= text_.size()) fail({"')'"});
      std::string_view raw = text_.substr(poly_start, pos_ - poly_start);
      PolyText terms = parse_poly_text(raw, poly_start);
      std::string compact;
      for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      }
      Span poly_span{poly_start, pos_};
      ++pos_;
      e = make({QuotientNode{e, std::move(compact), std::move(terms), poly_span},
                {start, pos_}});
    }
    return e;
  }

  ModuleSpec module() {
    skip_ws();
    ModuleSpec m;
    m.span.begin = pos_;
    if (accept_word("zero")) {
      m.kind = ModuleSpec::Kind::kZero;
    } else if (accept_word("free")) {
      expect(':');
      m.kind = ModuleSpec::Kind::kFree;
      m.n = nat();
    } else if (accept_word("Z")) {
      expect('/');
      m.kind = ModuleSpec::Kind::kCyclic;
      m.n = nat();
      expect(':');
      m.table_file = path();
    } else {
      fail({"'zero'", "'free:'", "'Z/'"});
    }
    m.span.end = pos_;
    return m;
  }

  HomSpec hom() {
    skip_ws();
    HomSpec h;
    h.span.begin = pos_;
    if (accept_word("id")) {
      h.kind = HomSpec::Kind::kId;
    } else if (accept_word("scale0")) {
      expect(':');
      h.kind = HomSpec::Kind::kScale0;
      h.k = integer();
    } else if (accept('@')) {
      h.kind = HomSpec::Kind::kFile;
      h.table_file = path();
    } else {
      fail({"'id'", "'scale0:'", "'@'"});
    }
    h.span.end = pos_;
    return h;
  }

  IdealSpec ideal() {
    skip_ws();
    IdealSpec i;
    i.span.begin = pos_;
    expect('(');
    i.generators.push_back(nat());
    while (accept(',')) i.generators.push_back(nat());
    expect(')');
    i.span.end = pos_;
    return i;
  }

  ExprPtr atom() {
    skip_ws();
    std::size_t start = pos_;
    if (accept_word("Z")) {
      expect('/');
      Index n = nat();
      return make({ZmodNode{n}, {start, pos_}});
    }
    if (accept_word("GF")) {
      expect('(');
      Index p = nat();
      expect(')');
      return make({GFNode{p}, {start, pos_}});
    }
    if (accept_word("triv")) {
      expect('(');
      ExprPtr base = expr();
      expect(',');
      ModuleSpec m = module();
      expect(')');
      return make({TrivNode{base, m}, {start, pos_}});
    }
    if (accept_word("amalg")) {
      expect('(');
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(',');
      HomSpec h = hom();
      expect(',');
      IdealSpec i = ideal();
      expect(')');
      return make({AmalgNode{a, b, h, i}, {start, pos_}});
    }
    if (accept_word("dup")) {
      expect('(');
      ExprPtr a = expr();
      expect(',');
      IdealSpec i = ideal();
      expect(')');
      return make({DupNode{a, i}, {start, pos_}});
    }
    if (accept('(')) {
      ExprPtr inner = expr();
      expect(')');
      // Parentheses only group; keep the inner node with the wider span.
      RingExpr copy = *inner;
      copy.span = {start, pos_};
      return make(std::move(copy));
    }
    fail({"'Z/'", "'GF('", "'triv('", "'amalg('", "'dup('", "'('"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_module(const ModuleSpec& m) {
  switch (m.kind) {
    case ModuleSpec::Kind::kZero: return "zero";
    case ModuleSpec::Kind::kFree: return "free:" + std::to_string(m.n);
    case ModuleSpec::Kind::kCyclic:
      return "Z/" + std::to_string(m.n) + ":" + m.table_file;
  }
  return "";
}

std::string print_hom(const HomSpec& h) {
  switch (h.kind) {
    case HomSpec::Kind::kId: return "id";
    case HomSpec::Kind::kScale0: return "scale0:" + std::to_string(h.k);
    case HomSpec::Kind::kFile: return "@" + h.table_file;
  }
  return "";
}

std::string print_ideal(const IdealSpec& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.generators.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(i.generators[k]);
  }
  return out + ")";
}

bool same_spec(const ModuleSpec& a, const ModuleSpec& b) {
  return a.kind == b.kind && a.n == b.n && a.table_file == b.table_file;
}

bool same_spec(const HomSpec& a, const HomSpec& b) {
  return a.kind == b.kind && a.k == b.k && a.table_file == b.table_file;
}

bool same_spec(const IdealSpec& a, const IdealSpec& b) {
  return a.generators == b.generators;
}

bool same_terms(const PolyText& a, const PolyText& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.coeff != y.coeff || x.tuple != y.tuple || x.exponent != y.exponent) {
      return false;
    }
  }
  return true;
}

}  // namespace

ExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_ring_expr(const RingExpr& expr) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ZmodNode>) {
          return "Z/" + std::to_string(n.n);
        } else if constexpr (std::is_same_v<T, GFNode>) {
          return "GF(" + std::to_string(n.p) + ")";
        } else if constexpr (std::is_same_v<T, QuotientNode>) {
          std::string base = print_ring_expr(*n.base);
          if (std::holds_alternative<ProductNode>(n.base->node)) {
            base = "(" + base + ")";
          }
          return base + "[x]/(" + n.poly + ")";
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          std::string out;
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i > 0) out += "*";
            std::string f = print_ring_expr(*n.factors[i]);
            if (std::holds_alternative<ProductNode>(n.factors[i]->node)) {
              f = "(" + f + ")";
            }
            out += f;
          }
          return out;
        } else if constexpr (std::is_same_v<T, TrivNode>) {
          return "triv(" + print_ring_expr(*n.base) + "," +
                 print_module(n.module) + ")";
        } else if constexpr (std::is_same_v<T, AmalgNode>) {
          return "amalg(" + print_ring_expr(*n.a) + "," +
                 print_ring_expr(*n.b) + "," + print_hom(n.hom) + "," +
                 print_ideal(n.ideal) + ")";
        } else {
          return "dup(" + print_ring_expr(*n.a) + "," + print_ideal(n.ideal) +
                 ")";
        }
      },
      expr.node);
}

bool same_structure(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ZmodNode>) {
          return x.n == y.n;
        } else if constexpr (std::is_same_v<T, GFNode>) {
          return x.p == y.p;
        } else if constexpr (std::is_same_v<T, QuotientNode>) {
          return same_structure(*x.base, *y.base) &&
                 same_terms(x.terms, y.terms);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          if (x.factors.size() != y.factors.size()) return false;
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            if (!same_structure(*x.factors[i], *y.factors[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, TrivNode>) {
          return same_structure(*x.base, *y.base) &&
                 same_spec(x.module, y.module);
        } else if constexpr (std::is_same_v<T, AmalgNode>) {
          return same_structure(*x.a, *y.a) && same_structure(*x.b, *y.b) &&
                 same_spec(x.hom, y.hom) && same_spec(x.ideal, y.ideal);
        } else {
          return same_structure(*x.a, *y.a) && same_spec(x.ideal, y.ideal);
        }
      },
      a.node);
}

}  // namespace pring::cli
