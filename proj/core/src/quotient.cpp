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

#include "pring/quotient.hpp"

#include "pring/error.hpp"
#include "pring/limits.hpp"

namespace pring {
namespace {

constexpr Index kMulTableMaxOrder = 256;

}  // namespace

QuotientImpl::QuotientImpl(std::uint64_t p, FpPoly modulus)
    : p_(p), modulus_(std::move(modulus)), degree_(*modulus_.degree()) {
  auto order = checked_pow(p_, degree_);
  if (!order) throw Error(Errc::kSizeGuard, "quotient order overflows");
  order_ = *order;
  if (order_ <= kMulTableMaxOrder) {
    mul_table_.resize(order_ * order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = a; b < order_; ++b) {
        auto c = static_cast<std::uint32_t>(mul_direct(a, b));
        mul_table_[a * order_ + b] = c;
        mul_table_[b * order_ + a] = c;
      }
    }
  }
}

Index QuotientImpl::add(Index a, Index b) const {
  Index out = 0, scale = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    Index s = a % p_ + b % p_;
    out += (s >= p_ ? s - p_ : s) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Index QuotientImpl::neg(Index a) const {
  Index out = 0, scale = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    Index d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Index QuotientImpl::mul_direct(Index a, Index b) const {
  return encode(residue(a) * residue(b));
}

Index QuotientImpl::mul(Index a, Index b) const {
  if (!mul_table_.empty()) return mul_table_[a * order_ + b];
  return mul_direct(a, b);
}

std::string QuotientImpl::describe() const {
  return "GF(" + std::to_string(p_) + ")[x]/(" + modulus_.to_string() + ")";
}

Ring make_quotient(std::uint64_t p, const FpPoly& f) {
  require_prime(p);
  if (f.modulus() != p) {
    throw Error(Errc::kModulusMismatch, "modulus polynomial is not over GF(" +
                                            std::to_string(p) + ")");
  }
  if (f.is_constant()) {
    throw Error(Errc::kInvalidParameter,
                "quotient needs a modulus of degree >= 1");
  }
  auto order = checked_pow(p, *f.degree());
  if (!order) throw Error(Errc::kSizeGuard, "quotient order overflows");
  require_within_size_guard(*order, "make_quotient");
  return Ring(std::make_shared<QuotientImpl>(p, f.monic()));
}

// PolyOverRing -----------------------------------------------------------

PolyOverRing::PolyOverRing(Ring ring, std::vector<Index> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Index c : coeffs_) {
    if (c >= ring_.order()) {
      throw Error(Errc::kInvalidParameter,
                  "coefficient index out of range for " + ring_.describe());
    }
  }
  normalize();
}

void PolyOverRing::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> PolyOverRing::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

namespace {

void require_same_coeff_ring(const PolyOverRing& a, const PolyOverRing& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(Errc::kRingMismatch, "polynomials over different rings");
  }
}

}  // namespace

PolyOverRing operator+(const PolyOverRing& a, const PolyOverRing& b) {
  require_same_coeff_ring(a, b);
  std::vector<Index> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.ring_.add(a.coeff(i), b.coeff(i));
  }
  return PolyOverRing(a.ring_, std::move(out));
}

PolyOverRing operator*(const PolyOverRing& a, const PolyOverRing& b) {
  require_same_coeff_ring(a, b);
  if (a.is_zero() || b.is_zero()) return PolyOverRing(a.ring_);
  const Ring& r = a.ring_;
  std::vector<Index> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = r.add(out[i + j], r.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return PolyOverRing(r, std::move(out));
}

bool operator==(const PolyOverRing& a, const PolyOverRing& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

PolyOverRing PolyOverRing::pow(std::uint64_t e) const {
  PolyOverRing result(ring_, {ring_.one()});
  PolyOverRing base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PolyOverRing PolyOverRing::compose_xpow(std::size_t k) const {
  if (is_zero() || k == 0) {
    Index s = 0;
    for (Index c : coeffs_) s = ring_.add(s, c);
    return PolyOverRing(ring_, {s});
  }
  std::vector<Index> out((coeffs_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return PolyOverRing(ring_, std::move(out));
}

std::string PolyOverRing::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += "+";
    bool unit = coeffs_[i] == ring_.one();
    if (i == 0 || !unit) out += ring_.format(coeffs_[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FpPoly reduce_mod_maximal(const PolyOverRing& f, const RingHom& proj) {
  auto p = prime_field_order(proj.target());
  if (!p) {
    throw Error(Errc::kInvalidParameter,
                "projection target " + proj.target().describe() +
                    " is not a prime field");
  }
  if (!(proj.source() == f.ring())) {
    throw Error(Errc::kRingMismatch,
                "projection source differs from the coefficient ring");
  }
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (Index c : f.coeffs()) coeffs.push_back(proj.apply(c));
  return FpPoly(*p, std::move(coeffs));
}

PolyQuotient make_quotient_over_pring(const Ring& base, const PolyOverRing& f,
                                      std::span<const RingHom> projections) {
  if (projections.empty()) {
    throw Error(Errc::kInvalidParameter, "empty decomposition");
  }
  PolyQuotient out{base, {}, {}};
  std::vector<Ring> factors;
  Index order = 1;
  for (std::size_t j = 0; j < projections.size(); ++j) {
    FpPoly fj = reduce_mod_maximal(f, projections[j]);
    if (fj.is_zero()) {
      throw Error(Errc::kUnsupportedDegenerate,
                  "reduction f_" + std::to_string(j + 1) +
                      " is zero; the component ring would be infinite");
    }
    out.reductions.push_back(fj);
    if (fj.is_constant()) continue;
    auto part = checked_pow(fj.modulus(), *fj.degree());
    auto next = part ? checked_mul(order, *part) : std::nullopt;
    if (!next) throw Error(Errc::kSizeGuard, "quotient order overflows");
    order = *next;
    require_within_size_guard(order, "make_quotient_over_pring");
    out.kept.push_back(j);
  }
  if (out.kept.empty()) {
    throw Error(Errc::kUnsupportedDegenerate,
                "every reduction is a unit; the quotient is the zero ring");
  }
  for (std::size_t j : out.kept) {
    factors.push_back(
        make_quotient(out.reductions[j].modulus(), out.reductions[j]));
  }
  out.ring = factors.size() == 1 ? factors.front()
                                 : make_product(std::move(factors));
  return out;
}

}  // namespace pring
