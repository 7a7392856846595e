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

#include "pring/cli/commands.hpp"

#include <sstream>

#include "pring/cli/dsl.hpp"
#include "pring/cli/eval.hpp"
#include "pring/decision.hpp"
#include "pring/error.hpp"
#include "pring/limits.hpp"
#include "pring/poly_text.hpp"

namespace pring::cli {
namespace {

using Json = nlohmann::ordered_json;

class Report {
 public:
  explicit Report(Command cmd, const CommandArgs& args) {
    json_["command"] = std::string(to_string(cmd));
    json_["input"] = args.input;
    json_["p"] = args.p ? Json(*args.p) : Json(nullptr);
  }

  void line(const std::string& s) { text_ << s << "\n"; }
  Json& json() { return json_; }

  CommandResult finish(int code) {
    json_["exit_code"] = code;
    return CommandResult{code, text_.str(), json_};
  }

 private:
  std::ostringstream text_;
  Json json_;
};

std::string p_str(std::uint64_t p) { return std::to_string(p); }

std::uint64_t require_p(const CommandArgs& args) {
  if (!args.p) {
    throw Error(Errc::kInvalidParameter, "--p <prime> is required");
  }
  require_prime(*args.p);
  return *args.p;
}

Json report_json(const std::string& check, const DecisionReport& r) {
  Json j;
  j["check"] = check;
  j["verdict"] = r.verdict;
  j["method"] = std::string(to_string(r.method));
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["reason"] = r.witness_text;
  j["checked"] = r.checked;
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

std::string verdict_line(const std::string& label, const DecisionReport& r) {
  std::string out = label + ": " + (r.verdict ? "true" : "false") + " [" +
                    std::string(to_string(r.method)) + "]";
  if (!r.verdict && !r.witness_text.empty()) out += " (" + r.witness_text + ")";
  return out;
}

void describe_ring(Report& rep, const Evaluated& ev) {
  Json ring;
  ring["expr"] = ev.text;
  auto order = ev.order();
  ring["order"] = order ? Json(*order) : Json(nullptr);
  ring["materialized"] = ev.ring.has_value();
  if (ev.ring) {
    ring["family"] = std::string(to_string(ev.ring->family()));
    ring["characteristic"] = ev.ring->characteristic();
  }
  rep.json()["ring"] = ring;
  rep.line("ring: " + ev.text);
  rep.line("order: " + (order ? std::to_string(*order) : std::string("overflow")) +
           (ev.ring ? "" : " (not materialized)"));
  if (ev.ring) {
    rep.line("characteristic: " + std::to_string(ev.ring->characteristic()));
  }
}

// p-ring decision preferring structural criteria over enumeration.
DecisionReport decide_pring(const Evaluated& ev, std::uint64_t p) {
  if (ev.pring_quotient) {
    const auto& q = *ev.pring_quotient;
    if (q.p != p) {
      DecisionReport r;
      r.method = Method::kTheorem;
      r.witness_text = "char " + p_str(q.p) + " != " + p_str(p);
      return r;
    }
    return pring_poly_quotient_is_pring(q.base, q.f, p);
  }
  if (ev.ring) return is_p_ring(*ev.ring, p);
  if (ev.prime_quotient) {
    DecisionReport r;
    r.method = Method::kTheorem;
    r.verdict = ev.prime_quotient->p == p &&
                divides_xp_minus_x(ev.prime_quotient->f);
    if (!r.verdict) r.witness_text = "modulus does not divide x^p-x";
    return r;
  }
  if (ev.amalg) return amalgamation_is_pring(*ev.amalg, p);
  if (ev.triv) return trivial_ext_check(ev.triv->a, ev.triv->e, p,
                                        CheckMode::kPRing);
  throw Error(Errc::kSizeGuard, ev.size_guard_note);
}

std::optional<DecisionReport> decide_vnr(const Evaluated& ev) {
  if (ev.pring_quotient) {
    DecisionReport r;
    r.method = Method::kTheorem;
    r.verdict = true;
    for (std::size_t j = 0; j < ev.pring_quotient->reductions.size(); ++j) {
      const FpPoly& fj = ev.pring_quotient->reductions[j];
      if (!fj.is_constant() && !is_squarefree(fj)) {
        r.verdict = false;
        r.witness_text = "f_" + std::to_string(j + 1) + " = " +
                         fj.to_string() + " is not squarefree";
        break;
      }
    }
    return r;
  }
  if (ev.triv) {
    return trivial_ext_check(ev.triv->a, ev.triv->e, 2, CheckMode::kVnr);
  }
  if (ev.ring) {
    try {
      return is_vnr(*ev.ring);
    } catch (const Error& e) {
      if (e.code() != Errc::kSizeGuard) throw;
      return std::nullopt;
    }
  }
  if (ev.prime_quotient) {
    DecisionReport r;
    r.method = Method::kTheorem;
    r.verdict = is_squarefree(ev.prime_quotient->f);
    if (!r.verdict) r.witness_text = "modulus is not squarefree";
    return r;
  }
  return std::nullopt;
}

bool is_zmod(const Evaluated& ev) {
  return ev.ring && ev.ring->as<ZmodImpl>() != nullptr;
}

// Rewrites an ideal of GF(p)[x]/(f) as (g), g = gcd of f and its elements.
IdealDesc prefer_structural(const IdealDesc& ideal) {
  const auto* q = ideal.ring().as<QuotientImpl>();
  if (q == nullptr || ideal.is_structural()) return ideal;
  FpPoly g = q->modulus();
  for (Index e : ideal.elements()) g = gcd(g, q->residue(e));
  IdealDesc structural = IdealDesc::quotient_divisor(ideal.ring(), g);
  return structural == ideal ? structural : ideal;
}

// --- check -----------------------------------------------------------------

int run_check(Report& rep, const Evaluated& ev, std::uint64_t p) {
  Json results = Json::array();
  DecisionReport pr = decide_pring(ev, p);
  rep.line(verdict_line(p_str(p) + "-ring", pr));
  results.push_back(report_json("p-ring", pr));
  if (auto vnr = decide_vnr(ev)) {
    rep.line(verdict_line("von Neumann regular", *vnr));
    results.push_back(report_json("vnr", *vnr));
  } else {
    rep.line("von Neumann regular: unknown (size guard)");
  }

  if (is_zmod(ev)) {
    Index n = ev.ring->order();
    auto ideals = p_ideals_of_zmod(n, p);
    Json j;
    j["check"] = "nonzero-p-ideal";
    j["verdict"] = ideals.size() > 1;
    j["method"] = "theorem";
    if (ideals.size() > 1) {
      rep.line("unique nonzero " + p_str(p) + "-ideal: " +
               ideals[1].to_string() + " [theorem]");
      j["ideal"] = ideals[1].to_string();
    } else {
      rep.line("no nonzero " + p_str(p) + "-ideal (v_" + p_str(p) + "(" +
               std::to_string(n) + ") = " +
               std::to_string(p_valuation(n, p)) + ") [theorem]");
      j["ideal"] = nullptr;
    }
    results.push_back(j);
  } else if (ev.prime_quotient && ev.prime_quotient->p == p) {
    DecisionReport r = quotient_has_p_ideal(p, ev.prime_quotient->f);
    rep.line(verdict_line("has nonzero " + p_str(p) + "-ideal", r));
    results.push_back(report_json("nonzero-p-ideal", r));
  } else if (ev.ring && ev.ring->order() <= limits().oracle_guard) {
    auto ideals = p_ideals_oracle(*ev.ring, p);
    rep.line("nonzero " + p_str(p) + "-ideals: " +
             std::to_string(ideals.size() - 1) + " [oracle]");
    Json j;
    j["check"] = "nonzero-p-ideal";
    j["verdict"] = ideals.size() > 1;
    j["method"] = "oracle";
    j["count"] = ideals.size() - 1;
    results.push_back(j);
  }
  for (const auto& [k, v] : pr.details) rep.line("  " + k + ": " + v);
  rep.json()["results"] = results;
  return kExitOk;
}

// --- ideals ----------------------------------------------------------------

int run_ideals(Report& rep, const Evaluated& ev, std::uint64_t p) {
  std::vector<IdealDesc> ideals;
  Method method = Method::kOracle;
  if (is_zmod(ev)) {
    ideals = p_ideals_of_zmod(ev.ring->order(), p);
    method = Method::kTheorem;
  } else {
    if (!ev.ring) throw Error(Errc::kSizeGuard, ev.size_guard_note);
    for (auto& ideal : p_ideals_oracle(*ev.ring, p)) {
      ideals.push_back(prefer_structural(ideal));
    }
  }
  rep.line(p_str(p) + "-ideals [" + std::string(to_string(method)) + "]:");
  Json list = Json::array();
  for (const auto& ideal : ideals) {
    rep.line("  " + ideal.to_string());
    Json j;
    j["ideal"] = ideal.to_string();
    j["size"] = ideal.size();
    j["elements"] = ideal.size() <= limits().oracle_guard
                        ? Json(ideal.elements())
                        : Json(nullptr);
    list.push_back(j);
  }
  rep.json()["method"] = std::string(to_string(method));
  rep.json()["ideals"] = list;
  return kExitOk;
}

// --- decompose -------------------------------------------------------------

int run_decompose(Report& rep, const Evaluated& ev, std::uint64_t p) {
  Json out;
  if (!ev.ring && ev.pring_quotient) {
    DecisionReport r = decide_pring(ev, p);
    if (!r.verdict) {
      throw Error(Errc::kPreconditionViolated,
                  "not a " + p_str(p) + "-ring: " + r.witness_text);
    }
    std::size_t n = 0;
    Json comps = Json::array();
    rep.line("components:");
    for (const auto& fj : ev.pring_quotient->reductions) {
      if (fj.is_constant()) continue;
      n += *fj.degree();
      rep.line("  GF(" + p_str(p) + ")[x]/(" + fj.to_string() + ") = GF(" +
               p_str(p) + ")^" + std::to_string(*fj.degree()));
      comps.push_back(fj.to_string());
    }
    auto order = checked_pow(p, n);
    auto ideals = checked_pow(2, n);
    rep.line("n: " + std::to_string(n));
    rep.line("elements: " + (order ? std::to_string(*order) : "overflow"));
    rep.line("ideals: " + (ideals ? std::to_string(*ideals) : "overflow"));
    rep.line("method: theorem");
    out["n"] = n;
    out["elements"] = order ? Json(*order) : Json(nullptr);
    out["ideals"] = ideals ? Json(*ideals) : Json(nullptr);
    out["method"] = "theorem";
    out["components"] = comps;
    rep.json()["decomposition"] = out;
    return kExitOk;
  }
  if (!ev.ring) throw Error(Errc::kSizeGuard, ev.size_guard_note);
  McCoyDecomposition dec = decompose_pring(*ev.ring, p);
  rep.line("n: " + std::to_string(dec.n));
  rep.line("elements: " + std::to_string(dec.order));
  rep.line("ideals: " + std::to_string(dec.ideal_count));
  rep.line("method: " + std::string(to_string(dec.method)));
  out["n"] = dec.n;
  out["elements"] = dec.order;
  out["ideals"] = dec.ideal_count;
  out["method"] = std::string(to_string(dec.method));
  Json maximal = Json::array();
  if (!dec.maximal_ideals.empty()) rep.line("maximal ideals:");
  for (std::size_t j = 0; j < dec.maximal_ideals.size(); ++j) {
    std::string s = dec.maximal_ideals[j].to_string();
    rep.line("  m" + std::to_string(j + 1) + " = " + s);
    maximal.push_back(s);
  }
  out["maximal_ideals"] = maximal;
  Json projections = Json::array();
  rep.line("projections:");
  for (std::size_t j = 0; j < dec.projections.size(); ++j) {
    const RingHom& h = dec.projections[j];
    std::string label = "pi" + std::to_string(j + 1) + ": " +
                        ev.ring->describe() + " -> " + h.target().describe() +
                        " (" + h.label() + ")";
    rep.line("  " + label);
    projections.push_back(label);
  }
  out["projections"] = projections;
  if (dec.iso) {
    rep.line("crt isomorphism: verified bijective ring hom onto " +
             dec.target.describe());
    out["iso_verified"] = true;
  }
  rep.json()["decomposition"] = out;
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct Pair {
  std::string name;
  bool theorem;
  std::optional<bool> oracle;
  std::string note;
};

template <typename F>
std::optional<bool> guarded(F&& oracle, std::string& note) {
  try {
    return oracle();
  } catch (const Error& e) {
    if (e.code() != Errc::kSizeGuard) throw;
    note = e.what();
    return std::nullopt;
  }
}

std::optional<std::size_t> predicted_maximal_ideals(const Evaluated& ev,
                                                    const DecisionReport& pr) {
  if (const auto* m = pr.detail("maximal_ideals")) return std::stoul(*m);
  if (!ev.ring || !pr.verdict) return std::nullopt;
  if (prime_field_order(*ev.ring)) return 1;
  if (const auto* q = ev.ring->as<QuotientImpl>()) return q->degree();
  if (const auto* prod = ev.ring->as<ProductImpl>()) {
    for (const Ring& f : prod->factors()) {
      if (!prime_field_order(f)) return std::nullopt;
    }
    return prod->factors().size();
  }
  return std::nullopt;
}

int run_verify(Report& rep, const Evaluated& ev, std::uint64_t p) {
  std::vector<Pair> pairs;
  DecisionReport pr = decide_pring(ev, p);
  {
    Pair pair{"p-ring", pr.verdict, std::nullopt, ""};
    if (ev.ring) {
      pair.oracle = guarded(
          [&] { return is_p_ring_oracle(*ev.ring, p).verdict; }, pair.note);
    } else if (ev.pring_quotient && ev.pring_quotient->p == p) {
      // Componentwise: the product is a p-ring iff each factor is.
      pair.oracle = guarded(
          [&] {
            bool all = true;
            for (const auto& fj : ev.pring_quotient->reductions) {
              if (fj.is_constant()) continue;
              all = is_p_ring_oracle(make_quotient(p, fj), p).verdict && all;
            }
            return all;
          },
          pair.note);
      pair.name = "p-ring (componentwise oracle)";
    } else {
      pair.note = ev.size_guard_note;
    }
    pairs.push_back(pair);
  }
  if (auto vnr = decide_vnr(ev); vnr && vnr->method == Method::kTheorem) {
    Pair pair{"vnr", vnr->verdict, std::nullopt, ""};
    if (ev.ring) {
      pair.oracle = guarded([&] { return is_vnr_oracle(*ev.ring).verdict; },
                            pair.note);
    } else if (ev.pring_quotient) {
      pair.oracle = guarded(
          [&] {
            bool all = true;
            for (const auto& fj : ev.pring_quotient->reductions) {
              if (fj.is_constant()) continue;
              all = is_vnr_oracle(make_quotient(fj.modulus(), fj)).verdict &&
                    all;
            }
            return all;
          },
          pair.note);
      pair.name = "vnr (componentwise oracle)";
    }
    pairs.push_back(pair);
  }
  if (is_zmod(ev)) {
    auto fast = p_ideals_of_zmod(ev.ring->order(), p);
    Pair pair{"p-ideals of Z/n", true, std::nullopt, ""};
    pair.oracle = guarded(
        [&] {
          auto slow = p_ideals_oracle(*ev.ring, p);
          if (slow.size() != fast.size()) return false;
          for (std::size_t i = 0; i < slow.size(); ++i) {
            // fast is built over Z/n, which differs from GF(p) as a handle.
            if (slow[i].elements() != fast[i].elements()) return false;
          }
          return true;
        },
        pair.note);
    pairs.push_back(pair);
  }
  if (ev.prime_quotient && ev.prime_quotient->p == p) {
    DecisionReport fast = quotient_has_p_ideal(p, ev.prime_quotient->f);
    Pair pair{"nonzero p-ideal", fast.verdict, std::nullopt, ""};
    if (ev.ring) {
      pair.oracle = guarded(
          [&] { return p_ideals_oracle(*ev.ring, p).size() > 1; }, pair.note);
    }
    pairs.push_back(pair);
  }
  if (auto n = predicted_maximal_ideals(ev, pr)) {
    Pair pair{"maximal ideals = " + std::to_string(*n), true, std::nullopt, ""};
    if (ev.ring) {
      pair.oracle = guarded(
          [&] { return mccoy_decompose(*ev.ring, p).n == *n; }, pair.note);
    }
    pairs.push_back(pair);
  }

  int code = kExitOk;
  bool any_oracle = false;
  Json checks = Json::array();
  for (const auto& pair : pairs) {
    Json j;
    j["check"] = pair.name;
    j["theorem"] = pair.theorem;
    std::string line = pair.name + ": theorem=" + (pair.theorem ? "true" : "false");
    if (pair.oracle) {
      any_oracle = true;
      bool agree = *pair.oracle == pair.theorem;
      if (!agree) code = kExitDisagreement;
      j["oracle"] = *pair.oracle;
      j["agree"] = agree;
      line += std::string(" oracle=") + (*pair.oracle ? "true" : "false") +
              (agree ? " agree" : " DISAGREE");
    } else {
      j["oracle"] = nullptr;
      j["agree"] = nullptr;
      line += " oracle=skipped";
      if (!pair.note.empty()) line += " (" + pair.note + ")";
    }
    rep.line(line);
    checks.push_back(j);
  }
  rep.json()["checks"] = checks;
  if (!any_oracle) {
    rep.line("no oracle could run within the size guard");
    return kExitSizeGuard;
  }
  return code;
}

// --- factor ----------------------------------------------------------------

int run_factor(Report& rep, const CommandArgs& args, std::uint64_t p) {
  FpPoly f = parse_fp_poly(args.input, p);
  Factorization fac = factor_irreducible(f);
  std::string text;
  if (fac.leading != 1) text += std::to_string(fac.leading);
  Json factors = Json::array();
  for (const auto& [g, e] : fac.factors) {
    if (!text.empty()) text += " ";
    text += "(" + g.to_string() + ")";
    if (e > 1) text += "^" + std::to_string(e);
    Json j;
    j["poly"] = g.to_string();
    j["exponent"] = e;
    factors.push_back(j);
  }
  rep.line("polynomial: " + f.to_string() + " over GF(" + p_str(p) + ")");
  rep.line("factorization: " + text);
  rep.line("roots:");
  Json roots = Json::array();
  for (const Root& r : roots_with_multiplicity(f)) {
    rep.line("  " + std::to_string(r.value) + " multiplicity " +
             std::to_string(r.multiplicity));
    Json j;
    j["value"] = r.value;
    j["multiplicity"] = r.multiplicity;
    roots.push_back(j);
  }
  rep.line(std::string("squarefree: ") + (is_squarefree(f) ? "true" : "false"));
  rep.line(std::string("divides x^p-x: ") +
           (divides_xp_minus_x(f) ? "true" : "false"));
  rep.json()["polynomial"] = f.to_string();
  rep.json()["leading"] = fac.leading;
  rep.json()["factors"] = factors;
  rep.json()["roots"] = roots;
  rep.json()["squarefree"] = is_squarefree(f);
  rep.json()["divides_xp_minus_x"] = divides_xp_minus_x(f);
  return kExitOk;
}

std::string caret_diagnostic(const std::string& input, std::size_t offset) {
  return "  " + input + "\n  " + std::string(std::min(offset, input.size()), ' ') +
         "^";
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "check") return Command::kCheck;
  if (name == "ideals") return Command::kIdeals;
  if (name == "decompose") return Command::kDecompose;
  if (name == "verify") return Command::kVerify;
  if (name == "factor") return Command::kFactor;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kCheck: return "check";
    case Command::kIdeals: return "ideals";
    case Command::kDecompose: return "decompose";
    case Command::kVerify: return "verify";
    case Command::kFactor: return "factor";
  }
  return "?";
}

CommandResult run_command(Command cmd, const CommandArgs& args) {
  Report rep(cmd, args);
  try {
    std::uint64_t p = require_p(args);
    if (cmd == Command::kFactor) return rep.finish(run_factor(rep, args, p));
    ExprPtr expr = parse_ring_expr(args.input);
    Evaluated ev = evaluate(*expr, args.base_dir);
    describe_ring(rep, ev);
    rep.line("p: " + p_str(p));
    switch (cmd) {
      case Command::kCheck: return rep.finish(run_check(rep, ev, p));
      case Command::kIdeals: return rep.finish(run_ideals(rep, ev, p));
      case Command::kDecompose: return rep.finish(run_decompose(rep, ev, p));
      case Command::kVerify: return rep.finish(run_verify(rep, ev, p));
      case Command::kFactor: break;
    }
    return rep.finish(kExitUsage);
  } catch (const ParseError& e) {
    rep.line(std::string("error: ") + e.what());
    rep.line(caret_diagnostic(args.input, e.offset()));
    Json err;
    err["kind"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    err["offset"] = e.offset();
    err["expected"] = e.expected();
    rep.json()["error"] = err;
    return rep.finish(kExitUsage);
  } catch (const Error& e) {
    rep.line(std::string("error: ") + e.what());
    Json err;
    err["kind"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    rep.json()["error"] = err;
    int code = kExitUsage;
    if (e.code() == Errc::kSizeGuard) code = kExitSizeGuard;
    if (e.code() == Errc::kInternalInconsistency) code = kExitDisagreement;
    return rep.finish(code);
  }
}

}  // namespace pring::cli
