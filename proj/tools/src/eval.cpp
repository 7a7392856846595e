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

#include "pring/cli/eval.hpp"

#include <fstream>
#include <sstream>

#include "pring/decision.hpp"
#include "pring/error.hpp"

namespace pring::cli {
namespace {

Ring require_ring(const Evaluated& e) {
  if (!e.ring) {
    throw Error(Errc::kSizeGuard,
                e.text + " is too large to materialize as an operand");
  }
  return *e.ring;
}

Index coefficient(const Ring& ring, const PolyTerm& term) {
  if (!term.tuple || term.coeff.size() == 1) {
    return ring.int_mul(term.coeff[0], ring.one());
  }
  const auto* prod = ring.as<ProductImpl>();
  if (prod == nullptr || prod->factors().size() != term.coeff.size()) {
    std::size_t arity = prod ? prod->factors().size() : 1;
    throw ParseError(term.offset, {},
                     "tuple coefficient has " +
                         std::to_string(term.coeff.size()) +
                         " entries but " + ring.describe() + " has " +
                         std::to_string(arity) + " factors");
  }
  std::vector<Index> parts;
  for (std::size_t k = 0; k < term.coeff.size(); ++k) {
    const Ring& f = prod->factors()[k];
    parts.push_back(f.int_mul(term.coeff[k], f.one()));
  }
  return prod->encode(parts);
}

PolyOverRing poly_over(const Ring& ring, const PolyText& text) {
  std::vector<Index> coeffs;
  for (const auto& term : text.terms) {
    if (term.exponent > (std::uint64_t{1} << 20)) {
      throw ParseError(term.offset, {}, "exponent too large");
    }
    if (coeffs.size() <= term.exponent) coeffs.resize(term.exponent + 1, 0);
    coeffs[term.exponent] =
        ring.add(coeffs[term.exponent], coefficient(ring, term));
  }
  return PolyOverRing(ring, std::move(coeffs));
}

IdealDesc make_ideal(const Ring& ring, const IdealSpec& spec) {
  for (Index g : spec.generators) {
    if (g >= ring.order()) {
      throw ParseError(spec.span.begin, {},
                       "generator " + std::to_string(g) +
                           " is not an element index of " + ring.describe());
    }
  }
  return IdealDesc::generated_by(ring, spec.generators);
}

template <typename F>
void materialize(Evaluated& out, F&& build) {
  try {
    out.ring = build();
  } catch (const Error& e) {
    if (e.code() != Errc::kSizeGuard) throw;
    out.size_guard_note = e.what();
  }
}

Evaluated eval_node(const RingExpr& expr,
                    const std::filesystem::path& base_dir) {
  Evaluated out;
  out.text = print_ring_expr(expr);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ZmodNode>) {
          out.ring = make_zmod(n.n);
        } else if constexpr (std::is_same_v<T, GFNode>) {
          out.ring = make_prime_field(n.p);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          std::vector<Ring> factors;
          for (const auto& f : n.factors) {
            factors.push_back(require_ring(eval_node(*f, base_dir)));
          }
          out.ring = make_product(std::move(factors));
        } else if constexpr (std::is_same_v<T, QuotientNode>) {
          Ring base = require_ring(eval_node(*n.base, base_dir));
          if (auto p = prime_field_order(base)) {
            FpPoly f = to_fp_poly(n.terms, *p);
            if (f.is_constant()) {
              throw ParseError(n.poly_span.begin, {"polynomial of degree >= 1"},
                               "modulus is constant");
            }
            out.prime_quotient = PrimeQuotientInfo{*p, f};
            materialize(out, [&] { return make_quotient(*p, f); });
            return;
          }
          Index c = base.characteristic();
          if (!is_prime(c)) {
            throw Error(Errc::kPreconditionViolated,
                        "quotients need GF(p) or a p-ring as base, got " +
                            base.describe());
          }
          PolyOverRing f = poly_over(base, n.terms);
          McCoyDecomposition dec = decompose_pring(base, c);
          std::vector<FpPoly> reductions;
          for (const auto& proj : dec.projections) {
            reductions.push_back(reduce_mod_maximal(f, proj));
          }
          out.pring_quotient = PringQuotientInfo{base, f, c, reductions};
          materialize(out, [&] {
            return make_quotient_over_pring(base, f, dec.projections).ring;
          });
        } else if constexpr (std::is_same_v<T, TrivNode>) {
          Ring a = require_ring(eval_node(*n.base, base_dir));
          std::optional<ModuleDesc> e;
          switch (n.module.kind) {
            case ModuleSpec::Kind::kZero:
              e = ModuleDesc::zero(a);
              break;
            case ModuleSpec::Kind::kFree:
              e = ModuleDesc::free(a, static_cast<unsigned>(n.module.n));
              break;
            case ModuleSpec::Kind::kCyclic: {
              auto table = read_table_file(base_dir / n.module.table_file,
                                           a.order() * n.module.n);
              e = ModuleDesc::cyclic(
                  a, n.module.n, std::move(table),
                  "Z/" + std::to_string(n.module.n) + ":" +
                      n.module.table_file);
              break;
            }
          }
          out.triv = TrivInfo{a, *e};
          materialize(out, [&] { return make_trivial_extension(a, *e); });
        } else if constexpr (std::is_same_v<T, AmalgNode> ||
                             std::is_same_v<T, DupNode>) {
          Ring a = require_ring(eval_node(*n.a, base_dir));
          Ring b = a;
          std::optional<RingHom> hom;
          if constexpr (std::is_same_v<T, AmalgNode>) {
            b = require_ring(eval_node(*n.b, base_dir));
            switch (n.hom.kind) {
              case HomSpec::Kind::kId:
                if (!(a == b)) {
                  throw ParseError(n.hom.span.begin, {},
                                   "'id' needs identical rings A and B");
                }
                b = a;
                hom = identity_hom(a);
                break;
              case HomSpec::Kind::kScale0:
                hom = make_scale0_hom(a, b, n.hom.k);
                break;
              case HomSpec::Kind::kFile:
                hom = make_hom(
                    a, b,
                    read_table_file(base_dir / n.hom.table_file, a.order()),
                    "@" + n.hom.table_file);
                break;
            }
          } else {
            hom = identity_hom(a);
          }
          AmalgDesc desc{a, b, *hom, make_ideal(b, n.ideal)};
          validate_amalgamation(desc);
          out.amalg = desc;
          materialize(out, [&] { return make_amalgamation(desc); });
        }
      },
      expr.node);
  return out;
}

}  // namespace

std::optional<Index> Evaluated::order() const {
  if (ring) return ring->order();
  if (pring_quotient) {
    Index total = 1;
    for (const auto& fj : pring_quotient->reductions) {
      if (fj.is_constant()) continue;
      auto part = checked_pow(fj.modulus(), *fj.degree());
      auto next = part ? checked_mul(total, *part) : std::nullopt;
      if (!next) return std::nullopt;
      total = *next;
    }
    return total;
  }
  if (prime_quotient) {
    return checked_pow(prime_quotient->p, *prime_quotient->f.degree());
  }
  if (triv) return checked_mul(triv->a.order(), triv->e.order());
  if (amalg) return checked_mul(amalg->a.order(), amalg->j.size());
  return std::nullopt;
}

Evaluated evaluate(const RingExpr& expr, const std::filesystem::path& base_dir) {
  return eval_node(expr, base_dir);
}

std::vector<Index> read_table_file(const std::filesystem::path& path, Index n) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kInvalidParameter,
                "cannot open table file " + path.string());
  }
  std::vector<Index> table(n, 0);
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& why) {
    throw Error(Errc::kInvalidParameter, path.string() + ":" +
                                             std::to_string(lineno) + ": " +
                                             why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) bad("expected 'source -> target'");
    std::istringstream lhs(line.substr(0, arrow));
    std::istringstream rhs(line.substr(arrow + 2));
    Index src = 0, dst = 0;
    std::string rest;
    if (!(lhs >> src) || (lhs >> rest) || !(rhs >> dst) || (rhs >> rest)) {
      bad("expected 'source -> target'");
    }
    if (src >= n) bad("source index " + std::to_string(src) + " out of range");
    if (seen[src]) bad("duplicate source index " + std::to_string(src));
    seen[src] = true;
    table[src] = dst;
  }
  for (Index i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw Error(Errc::kInvalidParameter,
                  path.string() + ": missing source index " + std::to_string(i));
    }
  }
  return table;
}

}  // namespace pring::cli
