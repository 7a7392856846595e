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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pring/numeric.hpp"

namespace pring {

// Dense polynomial over GF(p), little-endian coefficients, no trailing zeros.
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p);
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly from_signed(std::uint64_t p,
                            const std::vector<std::int64_t>& coeffs);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t degree);
  static FpPoly x(std::uint64_t p) { return monomial(p, 1, 1); }
  // x^p - x.
  static FpPoly frobenius_fixed(std::uint64_t p);
  // Polynomial whose coefficients are the base-p digits of `index`.
  static FpPoly from_index(std::uint64_t p, Index index);
  // Monic polynomial of exactly `degree` whose lower coefficients are the
  // base-p digits of `index`; enumerates all monic polys of that degree.
  static FpPoly monic_from_index(std::uint64_t p, std::size_t degree,
                                 Index index);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt is the degree of the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::uint64_t coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::uint64_t leading() const { return is_zero() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  FpPoly monic() const;
  FpPoly scaled(std::uint64_t c) const;
  // Inverse of from_index for polynomials of degree < width.
  Index to_index() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

struct DivMod {
  FpPoly quotient;
  FpPoly remainder;
};

enum class PolyOp { kAdd, kSub, kMul, kDivMod, kDerivative, kEval };

DivMod divmod(const FpPoly& f, const FpPoly& g);
FpPoly operator%(const FpPoly& f, const FpPoly& g);
FpPoly operator/(const FpPoly& f, const FpPoly& g);
FpPoly derivative(const FpPoly& f);
std::uint64_t eval(const FpPoly& f, std::uint64_t a);
// Monic gcd; throws kUndefinedGcd when both are zero.
FpPoly gcd(const FpPoly& f, const FpPoly& g);
// base^e mod m.
FpPoly pow_mod(const FpPoly& base, std::uint64_t e, const FpPoly& m);
// f(x^k).
FpPoly compose_xpow(const FpPoly& f, std::size_t k);
bool divides(const FpPoly& g, const FpPoly& f);

// Whether f | x^p - x, via x^p mod f == x mod f. deg f >= 1.
bool divides_xp_minus_x(const FpPoly& f);

struct Root {
  std::uint64_t value;
  unsigned multiplicity;
  friend bool operator==(const Root&, const Root&) = default;
};

// Roots in GF(p) with exact multiplicities, ascending by value. deg f >= 1.
std::vector<Root> roots_with_multiplicity(const FpPoly& f);

struct Factor {
  FpPoly poly;
  unsigned exponent;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
  std::uint64_t leading;
  // Monic irreducibles, sorted lexicographically by little-endian coefficient
  // vector.
  std::vector<Factor> factors;

  FpPoly expand(std::uint64_t p) const;
};

// Squarefree decomposition, distinct-degree split and Cantor-Zassenhaus
// equal-degree split. deg f >= 1.
Factorization factor_irreducible(const FpPoly& f);

bool is_irreducible(const FpPoly& f);
bool is_squarefree(const FpPoly& f);

}  // namespace pring
