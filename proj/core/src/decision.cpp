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

#include "pring/decision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pring/error.hpp"
#include "pring/limits.hpp"
#include "pring/sweep.hpp"

namespace pring {
namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 start_);
  }

 private:
  Clock::time_point start_ = Clock::now();
};

unsigned pick_workers(unsigned requested, Index count) {
  return requested != 0 ? requested : default_workers(count);
}

bool is_p_element(const Ring& ring, std::uint64_t p, Index x) {
  return ring.pow(x, p) == x && ring.int_mul_unsigned(p, x) == 0;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

DecisionReport theorem_report(bool verdict, std::string reason) {
  DecisionReport r;
  r.verdict = verdict;
  r.method = Method::kTheorem;
  if (!verdict) r.witness_text = std::move(reason);
  return r;
}

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::kOracle ? "oracle" : "theorem";
}

const std::string* DecisionReport::detail(std::string_view key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return &v;
  }
  return nullptr;
}

// Oracles ------------------------------------------------------------------

DecisionReport is_p_ring_oracle(const Ring& ring, std::uint64_t p,
                                unsigned workers) {
  require_prime(p);
  require_within_size_guard(ring.order(), "is_p_ring_oracle");
  Stopwatch sw;
  const Index n = ring.order();
  // Frobenius condition first, so a witness x has x^p != x whenever one
  // exists; the additive condition px = 0 is swept only afterwards.
  const unsigned w = pick_workers(workers, n);
  auto bad = first_failure(
      n, [&](Index x) { return ring.pow(x, p) != x; }, w);
  bool additive = false;
  if (!bad) {
    bad = first_failure(
        n, [&](Index x) { return ring.int_mul_unsigned(p, x) != 0; }, w);
    additive = bad.has_value();
  }
  DecisionReport r;
  r.method = Method::kOracle;
  r.verdict = !bad;
  r.checked = bad ? *bad + 1 : n;
  if (bad) {
    r.witness = *bad;
    Index x = *bad;
    r.witness_text = !additive
                         ? ring.format(x) + "^" + std::to_string(p) + " = " +
                               ring.format(ring.pow(x, p))
                         : std::to_string(p) + "*" + ring.format(x) + " = " +
                               ring.format(ring.int_mul_unsigned(p, x));
  }
  r.elapsed = sw.elapsed();
  return r;
}

DecisionReport is_vnr_oracle(const Ring& ring, unsigned workers) {
  require_within_size_guard(ring.order(), "is_vnr_oracle");
  Stopwatch sw;
  const Index n = ring.order();
  auto bad = first_failure(
      n,
      [&](Index a) {
        Index a2 = ring.mul(a, a);
        for (Index b = 0; b < n; ++b) {
          if (ring.mul(a2, b) == a) return false;
        }
        return true;
      },
      pick_workers(workers, n * n));
  DecisionReport r;
  r.method = Method::kOracle;
  r.verdict = !bad;
  r.checked = bad ? *bad + 1 : n;
  if (bad) {
    r.witness = *bad;
    r.witness_text = "no b with " + ring.format(*bad) + " = " +
                     ring.format(*bad) + "^2 b";
  }
  r.elapsed = sw.elapsed();
  return r;
}

DecisionReport is_p_ideal(const IdealDesc& ideal, std::uint64_t p) {
  require_prime(p);
  Stopwatch sw;
  const Ring& ring = ideal.ring();
  DecisionReport r;
  r.method = Method::kOracle;
  r.verdict = true;
  for (Index x : ideal.elements()) {
    ++r.checked;
    if (!is_p_element(ring, p, x)) {
      r.verdict = false;
      r.witness = x;
      r.witness_text = ring.format(x);
      break;
    }
  }
  r.elapsed = sw.elapsed();
  return r;
}

std::vector<IdealDesc> enumerate_ideals_oracle(const Ring& ring) {
  require_within_oracle_guard(ring.order(), "enumerate_ideals_oracle");
  const Index n = ring.order();
  // One generator per distinct principal ideal.
  std::map<std::vector<Index>, Index> principal;
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> px(n);
    for (Index r = 0; r < n; ++r) px[r] = ring.mul(r, x);
    std::sort(px.begin(), px.end());
    px.erase(std::unique(px.begin(), px.end()), px.end());
    principal.try_emplace(std::move(px), x);
  }
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> lattice;
  for (const auto& [elems, gen] : principal) {
    if (seen.insert(elems).second) lattice.push_back(elems);
  }
  // Every ideal of a finite ring is a sum of principal ideals, so closing
  // under I + (x) reaches the whole lattice.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& [elems, gen] : principal) {
      if (std::binary_search(lattice[i].begin(), lattice[i].end(), gen)) {
        continue;
      }
      std::vector<Index> sum = ideal_sum(ring, lattice[i], elems);
      if (seen.insert(sum).second) lattice.push_back(std::move(sum));
    }
  }
  std::sort(lattice.begin(), lattice.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<IdealDesc> out;
  out.reserve(lattice.size());
  for (auto& elems : lattice) {
    out.push_back(IdealDesc::extensional(ring, std::move(elems)));
  }
  return out;
}

std::vector<IdealDesc> p_ideals_oracle(const Ring& ring, std::uint64_t p) {
  require_prime(p);
  std::vector<IdealDesc> out;
  for (auto& ideal : enumerate_ideals_oracle(ring)) {
    if (is_p_ideal(ideal, p).verdict) out.push_back(std::move(ideal));
  }
  return out;
}

// Fast paths ---------------------------------------------------------------

std::vector<IdealDesc> p_ideals_of_zmod(Index n, std::uint64_t p) {
  require_prime(p);
  Ring ring = make_zmod(n);
  std::vector<IdealDesc> out{IdealDesc::zmod_multiples(ring, 0)};
  if (p_valuation(n, p) == 1) {
    out.push_back(IdealDesc::zmod_multiples(ring, n / p));
  }
  return out;
}

DecisionReport quotient_has_p_ideal(std::uint64_t p, const FpPoly& f) {
  require_prime(p);
  if (f.modulus() != p) {
    throw Error(Errc::kModulusMismatch, "polynomial is not over GF(" +
                                            std::to_string(p) + ")");
  }
  Stopwatch sw;
  std::vector<std::string> simple, repeated;
  for (const Root& root : roots_with_multiplicity(f)) {
    if (root.multiplicity == 1) {
      simple.push_back(std::to_string(root.value));
    } else {
      repeated.push_back(std::to_string(root.value) + "^" +
                         std::to_string(root.multiplicity));
    }
  }
  DecisionReport r = theorem_report(
      !simple.empty(),
      repeated.empty() ? "no root in GF(" + std::to_string(p) + ")"
                       : "only repeated roots " + join(repeated, ","));
  r.details.emplace_back("simple_roots", join(simple, ","));
  r.details.emplace_back("repeated_roots", join(repeated, ","));
  r.elapsed = sw.elapsed();
  return r;
}

McCoyDecomposition mccoy_decompose(const Ring& ring, std::uint64_t p) {
  require_prime(p);
  require_within_oracle_guard(ring.order(), "mccoy_decompose");
  DecisionReport pr = is_p_ring_oracle(ring, p);
  if (!pr.verdict) {
    throw Error(Errc::kPreconditionViolated,
                ring.describe() + " is not a " + std::to_string(p) +
                    "-ring: " + pr.witness_text);
  }
  auto inconsistent = [&](const std::string& what) {
    throw Error(Errc::kInternalInconsistency,
                "McCoy decomposition of " + ring.describe() + ": " + what);
  };
  const Index order = ring.order();
  std::vector<IdealDesc> ideals = enumerate_ideals_oracle(ring);
  std::vector<std::vector<Index>> proper;
  for (const auto& ideal : ideals) {
    if (ideal.size() < order) proper.push_back(ideal.elements());
  }
  auto subset = [](const std::vector<Index>& a, const std::vector<Index>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  Ring gfp = make_prime_field(p);
  McCoyDecomposition dec{p, 0, gfp, {}, {}, std::nullopt, ideals.size(),
                         order, Method::kOracle};
  // Index-p filter first; valid because R is a p-ring.
  for (const auto& m : proper) {
    if (m.size() * p != order) continue;
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](const auto& o) {
      return o.size() > m.size() && subset(m, o);
    });
    if (!maximal) continue;
    dec.maximal_ideals.push_back(IdealDesc::extensional(ring, m));
  }
  // Ascending lexicographic order of the kernels fixes the coordinate order.
  std::sort(dec.maximal_ideals.begin(), dec.maximal_ideals.end(),
            [](const IdealDesc& a, const IdealDesc& b) {
              return a.elements() < b.elements();
            });
  dec.n = dec.maximal_ideals.size();
  if (dec.n == 0) inconsistent("no maximal ideal found");

  // R/m = GF(p): x maps to the unique k with x - k*1 in m.
  for (const auto& m : dec.maximal_ideals) {
    std::vector<Index> table(order);
    for (Index x = 0; x < order; ++x) {
      std::optional<Index> hit;
      for (Index k = 0; k < p && !hit; ++k) {
        if (m.contains(ring.sub(x, ring.int_mul_unsigned(k, ring.one())))) {
          hit = k;
        }
      }
      if (!hit) inconsistent("R/m is not GF(p)");
      table[x] = *hit;
    }
    dec.projections.push_back(make_hom(ring, gfp, std::move(table),
                                       "mod " + m.to_string()));
  }

  dec.target = make_product(std::vector<Ring>(dec.n, gfp));
  const auto* target = dec.target.as<ProductImpl>();
  std::vector<Index> iso(order);
  std::vector<bool> hit(dec.target.order(), false);
  std::vector<Index> parts(dec.n);
  for (Index x = 0; x < order; ++x) {
    for (std::size_t j = 0; j < dec.n; ++j) {
      parts[j] = dec.projections[j].apply(x);
    }
    iso[x] = target->encode(parts);
    if (iso[x] >= hit.size() || hit[iso[x]]) inconsistent("CRT map not injective");
    hit[iso[x]] = true;
  }
  if (dec.target.order() != order) inconsistent("|R| != p^n");
  try {
    dec.iso = make_hom(ring, dec.target, std::move(iso), "crt");
  } catch (const Error& e) {
    inconsistent(e.what());
  }
  auto expected_ideals = checked_pow(2, dec.n);
  if (!expected_ideals || *expected_ideals != ideals.size()) {
    inconsistent(std::to_string(ideals.size()) + " ideals, expected 2^" +
                 std::to_string(dec.n));
  }
  for (const auto& ideal : ideals) {
    if (!is_p_ideal(ideal, p).verdict) {
      inconsistent("ideal " + ideal.to_string() + " is not a p-ideal");
    }
  }
  return dec;
}

McCoyDecomposition coordinate_decomposition(const Ring& ring,
                                            std::uint64_t p) {
  require_prime(p);
  std::size_t n = 1;
  if (const auto* prod = ring.as<ProductImpl>()) {
    n = prod->factors().size();
    for (const Ring& f : prod->factors()) {
      if (prime_field_order(f) != p) {
        throw Error(Errc::kPreconditionViolated,
                    "factor " + f.describe() + " is not GF(" +
                        std::to_string(p) + ")");
      }
    }
  } else if (prime_field_order(ring) != p) {
    throw Error(Errc::kPreconditionViolated,
                ring.describe() + " is not GF(" + std::to_string(p) + ")^n");
  }
  McCoyDecomposition dec{p, n, ring, {}, {}, std::nullopt, 0, ring.order(),
                         Method::kTheorem};
  for (std::size_t k = 0; k < n; ++k) {
    dec.projections.push_back(make_coordinate_projection(ring, k));
  }
  auto count = checked_pow(2, n);
  dec.ideal_count = count ? *count : 0;
  return dec;
}

McCoyDecomposition decompose_pring(const Ring& ring, std::uint64_t p) {
  if (ring.order() > limits().oracle_guard) {
    return coordinate_decomposition(ring, p);
  }
  return mccoy_decompose(ring, p);
}

DecisionReport pring_poly_quotient_is_pring(const Ring& base,
                                            const PolyOverRing& f,
                                            std::uint64_t p) {
  require_prime(p);
  if (!(f.ring() == base)) {
    throw Error(Errc::kRingMismatch, "polynomial is not over " + base.describe());
  }
  Stopwatch sw;
  McCoyDecomposition dec = decompose_pring(base, p);
  DecisionReport r;
  r.method = Method::kTheorem;
  r.verdict = true;
  std::size_t total_degree = 0, total_roots = 0;
  std::vector<std::string> reductions;
  for (std::size_t j = 0; j < dec.n; ++j) {
    FpPoly fj = reduce_mod_maximal(f, dec.projections[j]);
    if (fj.is_zero()) {
      throw Error(Errc::kDegenerateInput,
                  "reduction f_" + std::to_string(j + 1) + " is zero");
    }
    reductions.push_back(fj.to_string());
    ++r.checked;
    // A unit f_j gives the zero ring, which drops out of the product.
    if (fj.is_constant()) continue;
    total_degree += *fj.degree();
    total_roots += roots_with_multiplicity(fj).size();
    if (r.verdict && !divides_xp_minus_x(fj)) {
      r.verdict = false;
      r.witness_text = "f_" + std::to_string(j + 1) + " = " + fj.to_string() +
                       " does not divide x^" + std::to_string(p) + "-x";
    }
  }
  auto order = checked_pow(p, total_degree);
  r.details.emplace_back("components", std::to_string(dec.n));
  r.details.emplace_back("reductions", join(reductions, "; "));
  r.details.emplace_back("distinct_roots", std::to_string(total_roots));
  r.details.emplace_back(
      "order", order ? std::to_string(*order)
                     : std::to_string(p) + "^" + std::to_string(total_degree));
  if (r.verdict) {
    r.details.emplace_back("maximal_ideals", std::to_string(total_degree));
  }
  r.elapsed = sw.elapsed();
  return r;
}

DecisionReport amalgamation_is_pring(const AmalgDesc& desc, std::uint64_t p) {
  require_prime(p);
  validate_amalgamation(desc);
  Stopwatch sw;
  DecisionReport a = is_p_ring(desc.a, p);
  DecisionReport j = is_p_ideal(desc.j, p);
  DecisionReport r = theorem_report(
      a.verdict && j.verdict,
      !a.verdict ? "A is not a p-ring: " + a.witness_text
                 : "J is not a p-ideal: " + j.witness_text);
  r.checked = a.checked + j.checked;
  r.details.emplace_back("a_is_p_ring", a.verdict ? "true" : "false");
  r.details.emplace_back("j_is_p_ideal", j.verdict ? "true" : "false");
  r.elapsed = sw.elapsed();
  return r;
}

DecisionReport trivial_ext_check(const Ring& a, const ModuleDesc& e,
                                 std::uint64_t p, CheckMode mode) {
  if (!(e.base() == a)) {
    throw Error(Errc::kRingMismatch, "module is not over " + a.describe());
  }
  if (mode == CheckMode::kPRing) require_prime(p);
  Stopwatch sw;
  DecisionReport base = mode == CheckMode::kPRing ? is_p_ring(a, p) : is_vnr(a);
  bool trivial = e.order() == 1;
  const char* what = mode == CheckMode::kPRing ? "a p-ring" : "regular";
  DecisionReport r = theorem_report(
      base.verdict && trivial,
      !base.verdict ? std::string("A is not ") + what + ": " + base.witness_text
                    : "E is nonzero");
  r.details.emplace_back("base", base.verdict ? "true" : "false");
  r.details.emplace_back("module_order", std::to_string(e.order()));
  r.elapsed = sw.elapsed();
  return r;
}

DecisionReport is_p_ring(const Ring& ring, std::uint64_t p) {
  require_prime(p);
  if (const auto* z = ring.as<ZmodImpl>()) {
    return theorem_report(z->modulus() == p,
                          "char " + std::to_string(z->modulus()) + " != " +
                              std::to_string(p));
  }
  if (const auto* q = ring.as<QuotientImpl>()) {
    if (q->prime() != p) {
      return theorem_report(false, "char " + std::to_string(q->prime()) +
                                       " != " + std::to_string(p));
    }
    return theorem_report(divides_xp_minus_x(q->modulus()),
                          q->modulus().to_string() + " does not divide x^" +
                              std::to_string(p) + "-x");
  }
  if (const auto* prod = ring.as<ProductImpl>()) {
    for (std::size_t k = 0; k < prod->factors().size(); ++k) {
      DecisionReport part = is_p_ring(prod->factors()[k], p);
      if (!part.verdict) {
        return theorem_report(false, "factor " + std::to_string(k + 1) +
                                         ": " + part.witness_text);
      }
    }
    return theorem_report(true, "");
  }
  if (const auto* t = ring.as<TrivialExtImpl>()) {
    return trivial_ext_check(t->base(), t->module(), p, CheckMode::kPRing);
  }
  if (const auto* am = ring.as<AmalgamationImpl>()) {
    return amalgamation_is_pring(am->desc(), p);
  }
  return is_p_ring_oracle(ring, p);
}

DecisionReport is_vnr(const Ring& ring) {
  if (const auto* z = ring.as<ZmodImpl>()) {
    Index n = z->modulus();
    for (Index d = 2; d <= n / d; ++d) {
      if (n % (d * d) == 0) {
        return theorem_report(false, std::to_string(d) + "^2 divides " +
                                         std::to_string(n));
      }
    }
    return theorem_report(true, "");
  }
  if (const auto* q = ring.as<QuotientImpl>()) {
    return theorem_report(is_squarefree(q->modulus()),
                          q->modulus().to_string() + " is not squarefree");
  }
  if (const auto* prod = ring.as<ProductImpl>()) {
    for (std::size_t k = 0; k < prod->factors().size(); ++k) {
      DecisionReport part = is_vnr(prod->factors()[k]);
      if (!part.verdict) {
        return theorem_report(false, "factor " + std::to_string(k + 1) +
                                         ": " + part.witness_text);
      }
    }
    return theorem_report(true, "");
  }
  if (const auto* t = ring.as<TrivialExtImpl>()) {
    return trivial_ext_check(t->base(), t->module(), 2, CheckMode::kVnr);
  }
  return is_vnr_oracle(ring);
}

Index vnr_certificate(const Ring& ring, std::uint64_t p, Index a) {
  return p == 2 ? a : ring.pow(a, p - 2);
}

}  // namespace pring
