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

#include "pring/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "pring/error.hpp"

namespace pring {

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (p < 2) throw Error(Errc::kInvalidParameter, "polynomial modulus < 2");
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : FpPoly(p) {
  coeffs_ = std::move(coeffs);
  normalize();
}

void FpPoly::normalize() {
  for (auto& c : coeffs_) c %= p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::from_signed(std::uint64_t p,
                           const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coeffs.size());
  for (auto c : coeffs) reduced.push_back(reduce_signed(c, p));
  return FpPoly(p, std::move(reduced));
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) {
  return FpPoly(p, {c});
}

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return FpPoly(p, std::move(coeffs));
}

FpPoly FpPoly::frobenius_fixed(std::uint64_t p) {
  return monomial(p, 1, p) - x(p);
}

FpPoly FpPoly::from_index(std::uint64_t p, Index index) {
  std::vector<std::uint64_t> coeffs;
  while (index > 0) {
    coeffs.push_back(index % p);
    index /= p;
  }
  return FpPoly(p, std::move(coeffs));
}

FpPoly FpPoly::monic_from_index(std::uint64_t p, std::size_t degree,
                                Index index) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    coeffs[i] = index % p;
    index /= p;
  }
  coeffs[degree] = 1;
  return FpPoly(p, std::move(coeffs));
}

std::optional<std::size_t> FpPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  FpPoly out(p_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto a : coeffs_) out.coeffs_.push_back(mul_mod(a, c % p_, p_));
  out.normalize();
  return out;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

Index FpPoly::to_index() const {
  Index index = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) index = index * p_ + coeffs_[i];
  return index;
}

namespace {

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::kModulusMismatch,
                "polynomials over GF(" + std::to_string(a.modulus()) +
                    ") and GF(" + std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = a.coeff(i) + b.coeff(i);
    out[i] = s >= p ? s - p : s;
  }
  return FpPoly(p, std::move(out));
}

FpPoly operator-(const FpPoly& a) {
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeffs_[i] == 0 ? 0 : p - a.coeffs_[i];
  }
  return FpPoly(p, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      std::uint64_t s = out[i + j] + mul_mod(a.coeffs_[i], b.coeffs_[j], p);
      out[i + j] = s >= p ? s - p : s;
    }
  }
  return FpPoly(p, std::move(out));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::uint64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const FpPoly& f, const FpPoly& g) {
  require_same_modulus(f, g);
  if (g.is_zero()) {
    throw Error(Errc::kDivisionByZero, "division by the zero polynomial");
  }
  const std::uint64_t p = f.modulus();
  const std::size_t dg = *g.degree();
  std::vector<std::uint64_t> rem = f.coeffs();
  if (rem.size() <= dg) return {FpPoly(p), f};
  std::vector<std::uint64_t> quot(rem.size() - dg, 0);
  const std::uint64_t inv_lead = inv_mod(g.leading(), p);
  for (std::size_t i = rem.size(); i-- > dg;) {
    std::uint64_t c = mul_mod(rem[i], inv_lead, p);
    if (c == 0) continue;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) {
      std::uint64_t t = mul_mod(c, g.coeffs()[j], p);
      std::uint64_t& r = rem[i - dg + j];
      r = r >= t ? r - t : r + p - t;
    }
  }
  rem.resize(dg);
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& f, const FpPoly& g) {
  return divmod(f, g).remainder;
}

FpPoly operator/(const FpPoly& f, const FpPoly& g) {
  return divmod(f, g).quotient;
}

FpPoly derivative(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  if (f.coeffs().size() <= 1) return FpPoly(p);
  std::vector<std::uint64_t> out(f.coeffs().size() - 1);
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
    out[k - 1] = mul_mod(k % p, f.coeffs()[k], p);
  }
  return FpPoly(p, std::move(out));
}

std::uint64_t eval(const FpPoly& f, std::uint64_t a) {
  const std::uint64_t p = f.modulus();
  a %= p;
  std::uint64_t acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = (mul_mod(acc, a, p) + f.coeffs()[i]) % p;
  }
  return acc;
}

FpPoly gcd(const FpPoly& f, const FpPoly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) {
    throw Error(Errc::kUndefinedGcd, "gcd of two zero polynomials");
  }
  FpPoly a = f, b = g;
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly pow_mod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  require_same_modulus(base, m);
  FpPoly result = FpPoly::constant(m.modulus(), 1) % m;
  FpPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

FpPoly compose_xpow(const FpPoly& f, std::size_t k) {
  if (f.is_zero()) return f;
  if (k == 0) {
    std::uint64_t s = 0;
    for (auto c : f.coeffs()) s = (s + c) % f.modulus();
    return FpPoly::constant(f.modulus(), s);
  }
  std::vector<std::uint64_t> out((f.coeffs().size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    out[i * k] = f.coeffs()[i];
  }
  return FpPoly(f.modulus(), std::move(out));
}

bool divides(const FpPoly& g, const FpPoly& f) {
  return (f % g).is_zero();
}

namespace {

void require_nonconstant(const FpPoly& f, const char* what) {
  if (f.is_constant()) {
    throw Error(Errc::kInvalidParameter,
                std::string(what) + " needs a polynomial of degree >= 1");
  }
}

// x^p mod f.
FpPoly x_to_p_mod(const FpPoly& f) {
  return pow_mod(FpPoly::x(f.modulus()), f.modulus(), f);
}

// Coefficientwise p-th root of a polynomial in x^p.
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    out.push_back(f.coeffs()[i]);
  }
  return FpPoly(p, std::move(out));
}

// Monic f; returns pairwise coprime squarefree parts with multiplicities.
std::vector<std::pair<FpPoly, unsigned>> squarefree_parts(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  const FpPoly one = FpPoly::constant(p, 1);
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = f / c;
  unsigned i = 1;
  while (w != one) {
    FpPoly y = gcd(w, c);
    FpPoly part = w / y;
    if (part != one) out.emplace_back(part, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c != one) {
    for (auto& [g, e] : squarefree_parts(pth_root(c))) {
      out.emplace_back(g, e * static_cast<unsigned>(p));
    }
  }
  return out;
}

// Squarefree monic f; returns (product of all degree-d irreducible factors, d).
std::vector<std::pair<FpPoly, std::size_t>> distinct_degree_parts(FpPoly f) {
  const std::uint64_t p = f.modulus();
  const FpPoly one = FpPoly::constant(p, 1);
  const FpPoly x = FpPoly::x(p);
  std::vector<std::pair<FpPoly, std::size_t>> out;
  FpPoly h = x % f;
  std::size_t d = 1;
  while (!f.is_constant() && *f.degree() >= 2 * d) {
    h = pow_mod(h, p, f);
    FpPoly g = gcd(f, h - x);
    if (g != one) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (!f.is_constant()) out.emplace_back(f, *f.degree());
  return out;
}

// f is monic, squarefree, all irreducible factors of degree d.
void equal_degree_split(const FpPoly& f, std::size_t d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
  const std::size_t n = *f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> cs(n);
    for (auto& c : cs) c = coeff(rng);
    FpPoly a(p, std::move(cs));
    if (a.is_constant()) continue;
    FpPoly b(p);
    if (p == 2) {
      // Trace to GF(2): a + a^2 + ... + a^(2^(d-1)).
      FpPoly t = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      FpPoly t = a;
      FpPoly norm = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = pow_mod(t, p, f);
        norm = (norm * t) % f;
      }
      b = pow_mod(norm, (p - 1) / 2, f) - FpPoly::constant(p, 1);
    }
    if (b.is_zero()) continue;
    FpPoly g = gcd(f, b);
    if (g.is_constant() || *g.degree() == n) continue;
    equal_degree_split(g, d, rng, out);
    equal_degree_split(f / g, d, rng, out);
    return;
  }
}

bool lex_less(const FpPoly& a, const FpPoly& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

// (x - a) as a monic polynomial.
FpPoly linear(std::uint64_t p, std::uint64_t a) {
  return FpPoly(p, {a == 0 ? 0 : p - a, 1});
}

}  // namespace

bool divides_xp_minus_x(const FpPoly& f) {
  require_nonconstant(f, "divides_xp_minus_x");
  return x_to_p_mod(f) == FpPoly::x(f.modulus()) % f;
}

std::vector<Root> roots_with_multiplicity(const FpPoly& f) {
  require_nonconstant(f, "roots_with_multiplicity");
  const std::uint64_t p = f.modulus();
  FpPoly m = f.monic();
  // Product of the distinct linear factors.
  FpPoly split = gcd(m, x_to_p_mod(m) - FpPoly::x(p));
  std::vector<FpPoly> linears;
  if (!split.is_constant()) {
    std::mt19937_64 rng(0x5eed);
    equal_degree_split(split, 1, rng, linears);
  }
  std::vector<Root> roots;
  for (const FpPoly& l : linears) {
    std::uint64_t a = l.coeff(0) == 0 ? 0 : p - l.coeff(0);
    unsigned mult = 0;
    FpPoly rest = m;
    const FpPoly lin = linear(p, a);
    for (;;) {
      DivMod qr = divmod(rest, lin);
      if (!qr.remainder.is_zero()) break;
      ++mult;
      rest = std::move(qr.quotient);
    }
    roots.push_back({a, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.value < b.value; });
  return roots;
}

Factorization factor_irreducible(const FpPoly& f) {
  require_nonconstant(f, "factor_irreducible");
  std::mt19937_64 rng(0x5eed);
  std::map<std::vector<std::uint64_t>, Factor> merged;
  for (const auto& [part, mult] : squarefree_parts(f.monic())) {
    for (const auto& [block, d] : distinct_degree_parts(part)) {
      std::vector<FpPoly> irreducibles;
      equal_degree_split(block, d, rng, irreducibles);
      for (auto& g : irreducibles) {
        auto [it, fresh] = merged.try_emplace(g.coeffs(), Factor{g, 0});
        it->second.exponent += mult;
      }
    }
  }
  Factorization out{f.leading(), {}};
  for (auto& [key, factor] : merged) out.factors.push_back(factor);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) {
              return lex_less(a.poly, b.poly);
            });
  return out;
}

FpPoly Factorization::expand(std::uint64_t p) const {
  FpPoly acc = FpPoly::constant(p, leading);
  for (const auto& [g, e] : factors) {
    for (unsigned i = 0; i < e; ++i) acc = acc * g;
  }
  return acc;
}

bool is_irreducible(const FpPoly& f) {
  if (f.is_constant()) return false;
  auto fac = factor_irreducible(f);
  return fac.factors.size() == 1 && fac.factors[0].exponent == 1;
}

bool is_squarefree(const FpPoly& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  return gcd(f, derivative(f)).is_constant();
}

}  // namespace pring
