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

// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; runtime budgets are part of the pass condition where stated.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "pring/cli/commands.hpp"
#include "pring/cli/dsl.hpp"
#include "pring/cli/eval.hpp"
#include "pring/decision.hpp"
#include "pring/error.hpp"

namespace {

using namespace pring;
using cli::Command;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

// Rings certified as p-rings anywhere in the sweeps; criterion 5 decomposes
// each of them.
std::vector<std::pair<Ring, std::uint64_t>> g_certified;

// Expressions that criterion 11 re-runs through `verify`, with their prime.
std::vector<std::pair<std::string, std::uint64_t>> g_verify_cases;

std::filesystem::path g_table_dir;

Ring eval_text(const std::string& text) {
  return *cli::evaluate(*cli::parse_ring_expr(text), g_table_dir).ring;
}

std::set<std::vector<Index>> element_sets(const std::vector<IdealDesc>& v) {
  std::set<std::vector<Index>> out;
  for (const auto& i : v) out.insert(i.elements());
  return out;
}

Outcome criterion1() {
  Outcome o;
  const std::map<std::uint64_t, std::vector<std::string>> want = {
      {3, {"(0)", "20Z/60Z"}}, {5, {"(0)", "12Z/60Z"}}, {2, {"(0)"}}};
  for (const auto& [p, list] : want) {
    auto r = cli::run_command(Command::kIdeals, {"Z/60", p, "."});
    std::vector<std::string> got;
    for (const auto& i : r.json["ideals"]) got.push_back(i["ideal"]);
    o.expect(r.exit_code == 0 && got == list, "p=" + std::to_string(p));
    g_verify_cases.emplace_back("Z/60", p);
  }
  o.note = "3 primes";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t cases = 0;
  for (Index n = 2; n <= 200; ++n) {
    Ring r = make_zmod(n);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      ++cases;
      auto fast = element_sets(p_ideals_of_zmod(n, p));
      auto slow = element_sets(p_ideals_oracle(r, p));
      o.expect(fast == slow, "n=" + std::to_string(n) + " p=" + std::to_string(p));
      if (n == p) g_certified.emplace_back(r, p);
      g_verify_cases.emplace_back("Z/" + std::to_string(n), p);
    }
  }
  o.note = std::to_string(cases) + " (n, p) pairs";
  return o;
}

struct QuotientCase {
  std::uint64_t p;
  FpPoly f;
  Ring ring;
};

std::vector<QuotientCase> quotient_cases() {
  std::vector<QuotientCase> out;
  for (std::uint64_t p : {2u, 3u}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      Index count = *checked_pow(p, d);
      for (Index i = 0; i < count; ++i) {
        FpPoly f = FpPoly::monic_from_index(p, d, i);
        out.push_back({p, f, make_quotient(p, f)});
      }
    }
  }
  return out;
}

Outcome criterion3() {
  Outcome o;
  auto cases = quotient_cases();
  std::size_t yes = 0;
  for (const auto& c : cases) {
    bool fast = quotient_has_p_ideal(c.p, c.f).verdict;
    bool slow = p_ideals_oracle(c.ring, c.p).size() > 1;
    yes += fast;
    o.expect(fast == slow, "GF(" + std::to_string(c.p) + ")[x]/(" +
                               c.f.to_string() + ")");
    g_verify_cases.emplace_back(
        "GF(" + std::to_string(c.p) + ")[x]/(" + c.f.to_string() + ")", c.p);
  }
  o.note = std::to_string(cases.size()) + " moduli, " + std::to_string(yes) +
           " with a nonzero p-ideal";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto cases = quotient_cases();
  std::size_t yes = 0;
  for (const auto& c : cases) {
    Ring base = make_prime_field(c.p);
    std::vector<Index> coeffs(c.f.coeffs().begin(), c.f.coeffs().end());
    bool fast =
        pring_poly_quotient_is_pring(base, PolyOverRing(base, coeffs), c.p)
            .verdict;
    bool slow = is_p_ring_oracle(c.ring, c.p).verdict;
    yes += fast;
    o.expect(fast == slow, "GF(" + std::to_string(c.p) + ")[x]/(" +
                               c.f.to_string() + ")");
    if (slow) g_certified.emplace_back(c.ring, c.p);
  }
  o.note = std::to_string(yes) + " of " + std::to_string(cases.size()) +
           " quotients are p-rings";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<std::pair<Ring, std::uint64_t>> rings;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    std::vector<Ring> factors;
    for (Index order = p; order <= 256; order *= p) {
      factors.push_back(make_prime_field(p));
      rings.emplace_back(factors.size() == 1 ? factors[0] : make_product(factors),
                         p);
      std::string text = "GF(" + std::to_string(p) + ")";
      for (std::size_t k = 1; k < factors.size(); ++k)
        text += "*GF(" + std::to_string(p) + ")";
      g_verify_cases.emplace_back(text, p);
    }
  }
  rings.insert(rings.end(), g_certified.begin(), g_certified.end());
  for (const auto& [r, p] : rings) {
    std::string label = r.describe() + " p=" + std::to_string(p);
    try {
      McCoyDecomposition d = mccoy_decompose(r, p);
      auto pn = checked_pow(p, d.n);
      auto ideals = enumerate_ideals_oracle(r);
      bool all_p = true;
      for (const auto& i : ideals) all_p = all_p && is_p_ideal(i, p).verdict;
      bool bijective = false;
      if (d.iso) {
        std::set<Index> image(d.iso->table().begin(), d.iso->table().end());
        bijective = verify_hom(*d.iso).valid && image.size() == r.order() &&
                    d.target.order() == r.order();
      }
      o.expect(pn && *pn == r.order() && d.order == r.order() &&
                   d.ideal_count == (Index{1} << d.n) &&
                   ideals.size() == d.ideal_count && all_p && bijective,
               label);
    } catch (const Error& e) {
      o.expect(false, label + ": " + e.what());
    }
  }
  o.note = std::to_string(rings.size()) + " p-rings decomposed";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::string text = std::string(corpus::kExpressions[14]);
  cli::Evaluated ev = cli::evaluate(*cli::parse_ring_expr(text), ".");
  o.expect(!ev.ring.has_value(), "ring was materialized");
  o.expect(ev.pring_quotient.has_value(), "not a quotient over a p-ring");
  if (!ev.pring_quotient) return o;
  const auto& q = *ev.pring_quotient;
  std::size_t roots = 0;
  for (const auto& fj : q.reductions) {
    o.expect(divides_xp_minus_x(fj), fj.to_string() + " does not divide x^17-x");
    roots += roots_with_multiplicity(fj).size();
  }
  const std::vector<FpPoly> want = {
      FpPoly::from_signed(17, {1, 0, 1}), FpPoly::from_signed(17, {-1, 0, 1}),
      FpPoly::from_signed(17, {2, 0, 1}), FpPoly::from_signed(17, {-2, 0, 1})};
  o.expect(q.reductions == want, "reductions differ from x^2+1, x^2-1, x^2+2, x^2-2");
  const std::size_t n = 2;
  o.expect(roots == 8 && roots == 2 * n + 4, "root count " + std::to_string(roots));
  DecisionReport r = pring_poly_quotient_is_pring(q.base, q.f, 17);
  o.expect(r.verdict, "not certified as a 17-ring");
  o.expect(r.detail("order") && *r.detail("order") == "6975757441",
           "order detail");
  o.expect(ev.order() == Index{6975757441}, "predicted order");
  g_verify_cases.emplace_back(text, 17);
  o.note = "order 17^8 = 6975757441, " + std::to_string(roots) + " maximal ideals";
  return o;
}

struct PoolRing {
  std::string text;
  Ring ring;
};

std::vector<PoolRing> pool(std::initializer_list<const char*> texts) {
  std::vector<PoolRing> out;
  for (const char* t : texts) out.push_back({t, eval_text(t)});
  return out;
}

Outcome criterion7() {
  Outcome o;
  {
    const std::string text = "amalg(GF(2)*GF(2), Z/6, scale0:3, (3))";
    Ring r = eval_text(text);
    o.expect(r.order() == 8, "example order");
    o.expect(is_p_ring_oracle(r, 2).verdict, "example not a 2-ring");
    o.expect(mccoy_decompose(r, 2).n == 3, "example n != 3");
    g_verify_cases.emplace_back(text, 2);
  }
  auto as = pool({"GF(2)", "GF(3)", "GF(2)*GF(2)", "Z/4", "Z/6", "GF(2)*GF(3)",
                  "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^2)", "Z/2*Z/4",
                  "GF(2)*GF(2)*GF(2)", "GF(2)*GF(2)*GF(2)*GF(2)", "Z/8", "Z/9",
                  "GF(3)*GF(3)", "Z/12", "GF(3)[x]/(x^2-x)"});
  auto bs = pool({"GF(2)", "GF(3)", "Z/4", "Z/6", "Z/12", "Z/18", "Z/30",
                  "GF(2)*GF(2)", "GF(2)*Z/4", "Z/36", "GF(3)*GF(3)",
                  "GF(2)[x]/(x^2)"});
  std::mt19937_64 rng(0x5eed);
  int made = 0, attempts = 0, verdict_true = 0;
  while (made < 200) {
    ++attempts;
    const PoolRing& a = as[rng() % as.size()];
    bool same = rng() % 4 == 0;
    const PoolRing& b = same ? a : bs[rng() % bs.size()];
    const Ring& ar = a.ring;
    const Ring& br = b.ring;
    // a -> component_k(a) * (c * 1_B), or the identity when B = A.
    std::vector<Index> table(ar.order());
    if (same && rng() % 2 == 0) {
      for (Index x = 0; x < ar.order(); ++x) table[x] = x;
    } else {
      const auto* prod = ar.as<ProductImpl>();
      std::size_t k = prod ? rng() % prod->factors().size() : 0;
      Index c = rng() % br.order();
      Index unit = br.int_mul_unsigned(c, br.one());
      for (Index x = 0; x < ar.order(); ++x) {
        Index comp = prod ? prod->component(x, k) : x;
        table[x] = br.int_mul_unsigned(comp, unit);
      }
    }
    if (!verify_hom_table(ar, br, table).valid) continue;
    auto ideals = enumerate_ideals_oracle(br);
    const IdealDesc& j = ideals[rng() % ideals.size()];
    if (j.size() > 8) continue;
    AmalgDesc desc{ar, br, make_hom(ar, br, table), j};
    try {
      validate_amalgamation(desc);
    } catch (const Error&) {
      continue;
    }
    std::uint64_t p = rng() % 3 == 0 ? 3 : 2;
    Ring r = make_amalgamation(desc);
    bool fast = amalgamation_is_pring(desc, p).verdict;
    bool slow = is_p_ring_oracle(r, p).verdict;
    o.expect(fast == slow, r.describe() + " p=" + std::to_string(p));
    verdict_true += slow;
    if (slow) g_certified.emplace_back(r, p);

    // The same case through the DSL, with the hom as a table file.
    std::string file = "hom" + std::to_string(made) + ".tbl";
    std::ofstream out(g_table_dir / file);
    for (Index x = 0; x < table.size(); ++x) out << x << " -> " << table[x] << "\n";
    std::string gens;
    for (Index e : j.elements()) gens += (gens.empty() ? "" : ",") + std::to_string(e);
    g_verify_cases.emplace_back(
        "amalg(" + a.text + ", " + b.text + ", @" + file + ", (" + gens + "))", p);
    ++made;
  }
  o.note = "example + " + std::to_string(made) + " random cases (" +
           std::to_string(verdict_true) + " p-rings, " +
           std::to_string(attempts) + " draws)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int cases = 0;
  for (const char* text : {"GF(2)", "GF(2)*GF(2)", "Z/4"}) {
    Ring a = eval_text(text);
    bool a_pring = is_p_ring_oracle(a, 2).verdict;
    for (const auto& i : enumerate_ideals_oracle(a)) {
      ++cases;
      Ring d = make_duplication(a, i);
      bool d_pring = is_p_ring_oracle(d, 2).verdict;
      o.expect(d_pring == a_pring, d.describe());
      o.expect(amalgamation_is_pring(AmalgDesc{a, a, identity_hom(a), i}, 2)
                       .verdict == d_pring,
               "fast path " + d.describe());
      if (d_pring) g_certified.emplace_back(d, 2);
      std::string gens;
      for (Index e : i.elements()) gens += (gens.empty() ? "" : ",") + std::to_string(e);
      g_verify_cases.emplace_back(
          "dup(" + std::string(text) + ", (" + gens + "))", 2);
    }
  }
  o.note = std::to_string(cases) + " duplications";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int cases = 0;
  for (const char* text : {"GF(2)", "GF(3)", "GF(2)*GF(2)", "Z/4", "Z/6"}) {
    Ring a = eval_text(text);
    bool a_vnr = is_vnr_oracle(a).verdict;
    const std::vector<std::pair<std::string, ModuleDesc>> modules = {
        {"zero", ModuleDesc::zero(a)},
        {"free:1", ModuleDesc::free(a, 1)},
        {"free:2", ModuleDesc::free(a, 2)}};
    for (const auto& [mtext, e] : modules) {
      Ring r = make_trivial_extension(a, e);
      std::string label = r.describe();
      for (std::uint64_t p : {2u, 3u}) {
        ++cases;
        bool fast = trivial_ext_check(a, e, p, CheckMode::kPRing).verdict;
        bool slow = is_p_ring_oracle(r, p).verdict;
        o.expect(fast == slow, label + " p-ring p=" + std::to_string(p));
        if (slow) g_certified.emplace_back(r, p);
        g_verify_cases.emplace_back(
            "triv(" + std::string(text) + ", " + mtext + ")", p);
      }
      bool fast_vnr = trivial_ext_check(a, e, 2, CheckMode::kVnr).verdict;
      bool slow_vnr = is_vnr_oracle(r).verdict;
      o.expect(fast_vnr == slow_vnr, label + " vnr");
      o.expect(slow_vnr == (a_vnr && e.order() == 1), label + " vnr iff");
    }
  }
  o.note = std::to_string(cases) + " p-ring checks, 15 regularity checks";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);
  Ring f2 = make_prime_field(2);
  for (Ring r : {f2, make_prime_field(3), make_product({f2, f2})}) {
    std::uint64_t p = r.characteristic();
    o.expect(is_p_ring_oracle(r, p).verdict, r.describe() + " not a p-ring");
    for (int t = 0; t < 100; ++t) {
      std::vector<Index> c(rng() % 5 + 1);
      for (auto& v : c) v = rng() % r.order();
      PolyOverRing g(r, c);
      o.expect(g.pow(p) == g.compose_xpow(p), g.to_string());
    }
  }
  o.note = "300 polynomials";
  return o;
}

Outcome criterion11() {
  Outcome o;
  for (std::string_view text : corpus::kExpressions) {
    auto e = cli::parse_ring_expr(text);
    auto again = cli::parse_ring_expr(cli::print_ring_expr(*e));
    o.expect(cli::same_structure(*e, *again), "round trip " + std::string(text));
  }
  std::map<int, int> codes;
  for (const auto& [text, p] : g_verify_cases) {
    auto r = cli::run_command(Command::kVerify, {text, p, g_table_dir});
    ++codes[r.exit_code];
    o.expect(r.exit_code == 0, "verify " + text + " --p " + std::to_string(p) +
                                   " exit " + std::to_string(r.exit_code));
  }
  const std::vector<std::pair<std::string, std::size_t>> malformed = {
      {"Z/6*(GF(2)", 10}, {"GF(2)[x]/(x^^2)", 12}, {"amalg(Z/6, Z/6)", 14},
      {"Z/", 2}, {"dup(Z/4, ())", 10}};
  for (const auto& [text, offset] : malformed) {
    auto r = cli::run_command(Command::kCheck, {text, 2, "."});
    bool ok = r.exit_code == cli::kExitUsage && r.json.contains("error") &&
              r.json["error"]["offset"] == offset &&
              r.text.find("offset " + std::to_string(offset)) != std::string::npos;
    o.expect(ok, "malformed " + text + ": " + r.text);
  }
  o.note = "30 round trips, " + std::to_string(g_verify_cases.size()) +
           " verify runs, " + std::to_string(malformed.size()) +
           " malformed inputs";
  return o;
}

}  // namespace

int main() {
  g_table_dir = std::filesystem::temp_directory_path() / "pring-acceptance";
  std::filesystem::create_directories(g_table_dir);

  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Z/60Z p-ideals for p = 3, 5, 2", 1, criterion1},
      {2, "Z/nZ fast path vs oracle, n <= 200", 30, criterion2},
      {3, "quotient p-ideal existence vs oracle", 60, criterion3},
      {4, "f | x^p - x vs p-ring oracle", 0, criterion4},
      {5, "McCoy decomposition of every certified p-ring", 0, criterion5},
      {6, "p = 17 example over GF(17)^4", 1, criterion6},
      {7, "amalgamation fast path vs oracle", 0, criterion7},
      {8, "duplication is a 2-ring iff A is", 0, criterion8},
      {9, "trivial extension fast path vs oracle", 0, criterion9},
      {10, "Frobenius identity g(x)^p = g(x^p)", 0, criterion10},
      {11, "CLI contract", 0, criterion11},
  };
  // Criterion 5 consumes rings certified by 7-9, so run those first; lines
  // are still printed in numeric order.
  const int order[] = {1, 2, 3, 4, 6, 7, 8, 9, 10, 5, 11};
  std::map<int, std::pair<Outcome, double>> results;
  for (int id : order) {
    const Criterion& c = criteria[id - 1];
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.expect(false, "over the " + std::to_string(c.budget_s) + " s budget");
    }
    results[id] = {o, secs};
  }

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto& [o, secs] = results[c.id];
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.title << " [" << o.note << "; " << timing << "]\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    failed += !o.pass;
  }
  std::filesystem::remove_all(g_table_dir);
  std::cout << (failed == 0 ? "all criteria passed" : "some criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
