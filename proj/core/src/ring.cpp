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

#include "pring/ring.hpp"

#include <numeric>

#include "pring/error.hpp"
#include "pring/limits.hpp"
#include "pring/sweep.hpp"

namespace pring {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kZmod: return "Zmod";
    case Family::kPrimeField: return "PrimeField";
    case Family::kQuotient: return "Quotient";
    case Family::kProduct: return "Product";
    case Family::kTrivialExt: return "TrivialExt";
    case Family::kAmalgamation: return "Amalgamation";
  }
  return "?";
}

Index RingImpl::characteristic() const {
  Index acc = one();
  Index k = 1;
  while (acc != 0) {
    acc = add(acc, one());
    ++k;
  }
  return k;
}

Ring::Ring(std::shared_ptr<const RingImpl> impl)
    : impl_(std::move(impl)), characteristic_(impl_->characteristic()) {
  if (impl_->order() < 2 || impl_->one() == 0) {
    throw Error(Errc::kInvalidParameter, "ring must have identity != 0");
  }
}

Index Ring::pow(Index a, std::uint64_t e) const {
  Index result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

Index Ring::int_mul_unsigned(std::uint64_t k, Index a) const {
  k %= characteristic_;
  Index result = 0;
  while (k > 0) {
    if (k & 1) result = add(result, a);
    k >>= 1;
    if (k > 0) a = add(a, a);
  }
  return result;
}

Index Ring::int_mul(std::int64_t k, Index a) const {
  return int_mul_unsigned(reduce_signed(k, characteristic_), a);
}

Element Ring::element(Index index) const {
  if (index >= order()) {
    throw Error(Errc::kInvalidParameter,
                "element index " + std::to_string(index) + " out of range for " +
                    describe());
  }
  return Element(*this, index);
}

std::vector<Element> Ring::elements() const {
  require_within_size_guard(order(), "enumerate_elements");
  std::vector<Element> out;
  out.reserve(order());
  for (Index i = 0; i < order(); ++i) out.emplace_back(*this, i);
  return out;
}

bool Ring::operator==(const Ring& other) const {
  if (impl_ == other.impl_) return true;
  std::string key = impl_->structural_key();
  return !key.empty() && key == other.impl_->structural_key();
}

// Element ---------------------------------------------------------------

Element::Element(Ring ring, Index index)
    : ring_(std::move(ring)), index_(index) {}

namespace {

void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(Errc::kRingMismatch, "operands belong to different rings: " +
                                         a.ring().describe() + " and " +
                                         b.ring().describe());
  }
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_.add(a.index_, b.index_));
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_.sub(a.index_, b.index_));
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_.mul(a.index_, b.index_));
}

Element operator-(const Element& a) {
  return Element(a.ring_, a.ring_.neg(a.index_));
}

bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.index_ == b.index_;
}

Element Element::pow(std::uint64_t e) const {
  return Element(ring_, ring_.pow(index_, e));
}

Element Element::int_mul(std::int64_t k) const {
  return Element(ring_, ring_.int_mul(k, index_));
}

Element ring_arith(const Ring& ring, ArithOp op, std::span<const Element> args,
                   std::int64_t scalar) {
  std::size_t arity = (op == ArithOp::kAdd || op == ArithOp::kMul) ? 2 : 1;
  if (args.size() != arity) {
    throw Error(Errc::kInvalidParameter, "wrong number of operands");
  }
  for (const auto& a : args) {
    if (!(a.ring() == ring)) {
      throw Error(Errc::kRingMismatch,
                  "operand from " + a.ring().describe() + " used in " +
                      ring.describe());
    }
  }
  switch (op) {
    case ArithOp::kAdd: return args[0] + args[1];
    case ArithOp::kMul: return args[0] * args[1];
    case ArithOp::kNeg: return -args[0];
    case ArithOp::kPow:
      if (scalar < 0) {
        throw Error(Errc::kInvalidParameter, "negative exponent");
      }
      return args[0].pow(static_cast<std::uint64_t>(scalar));
    case ArithOp::kIntMul: return args[0].int_mul(scalar);
  }
  throw Error(Errc::kInvalidParameter, "unknown op");
}

// Zmod -------------------------------------------------------------------

Index ZmodImpl::add(Index a, Index b) const {
  Index s = a + b;
  // a, b < n <= 2^64 - 1; detect wrap as well as >= n.
  if (s < a || s >= n_) s -= n_;
  return s;
}

std::string ZmodImpl::describe() const {
  return prime_field_ ? "GF(" + std::to_string(n_) + ")"
                      : "Z/" + std::to_string(n_);
}

Ring make_zmod(Index n) {
  if (n < 2) {
    throw Error(Errc::kInvalidParameter,
                "Z/nZ needs n >= 2, got " + std::to_string(n));
  }
  return Ring(std::make_shared<ZmodImpl>(n, false));
}

Ring make_prime_field(Index p) {
  require_prime(p);
  return Ring(std::make_shared<ZmodImpl>(p, true));
}

std::optional<Index> prime_field_order(const Ring& ring) {
  if (const auto* z = ring.as<ZmodImpl>()) {
    if (z->family() == Family::kPrimeField || is_prime(z->modulus())) {
      return z->modulus();
    }
  }
  return std::nullopt;
}

// Product ----------------------------------------------------------------

ProductImpl::ProductImpl(std::vector<Ring> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(Errc::kInvalidParameter, "product of an empty list");
  }
  Index stride = 1;
  one_ = 0;
  for (const Ring& f : factors_) {
    stride_.push_back(stride);
    one_ += f.one() * stride;
    auto next = checked_mul(stride, f.order());
    if (!next) {
      throw Error(Errc::kSizeGuard, "product order overflows 64 bits");
    }
    stride = *next;
  }
  order_ = stride;
}

std::vector<Index> ProductImpl::decode(Index a) const {
  std::vector<Index> parts(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    parts[k] = a % factors_[k].order();
    a /= factors_[k].order();
  }
  return parts;
}

Index ProductImpl::encode(std::span<const Index> parts) const {
  Index a = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) a += parts[k] * stride_[k];
  return a;
}

Index ProductImpl::add(Index a, Index b) const {
  Index out = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Index m = factors_[k].order();
    out += factors_[k].add(a % m, b % m) * stride_[k];
    a /= m;
    b /= m;
  }
  return out;
}

Index ProductImpl::neg(Index a) const {
  Index out = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Index m = factors_[k].order();
    out += factors_[k].neg(a % m) * stride_[k];
    a /= m;
  }
  return out;
}

Index ProductImpl::mul(Index a, Index b) const {
  Index out = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Index m = factors_[k].order();
    out += factors_[k].mul(a % m, b % m) * stride_[k];
    a /= m;
    b /= m;
  }
  return out;
}

Index ProductImpl::characteristic() const {
  Index c = 1;
  for (const Ring& f : factors_) {
    auto next = checked_lcm(c, f.characteristic());
    if (!next) throw Error(Errc::kSizeGuard, "characteristic overflows");
    c = *next;
  }
  return c;
}

std::optional<std::vector<Index>> ProductImpl::additive_shape() const {
  std::vector<Index> shape;
  for (const Ring& f : factors_) {
    auto part = f.impl().additive_shape();
    if (!part) return std::nullopt;
    shape.insert(shape.end(), part->begin(), part->end());
  }
  return shape;
}

std::string ProductImpl::structural_key() const {
  std::string key = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::string part = factors_[k].impl().structural_key();
    if (part.empty()) return {};
    if (k > 0) key += "*";
    key += part;
  }
  return key + ")";
}

std::string ProductImpl::describe() const {
  std::string out = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) out += "*";
    out += factors_[k].describe();
  }
  return out + ")";
}

std::string ProductImpl::format(Index a) const {
  std::string out = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) out += ",";
    out += factors_[k].format(component(a, k));
  }
  return out + ")";
}

Ring make_product(std::vector<Ring> factors) {
  return Ring(std::make_shared<ProductImpl>(std::move(factors)));
}

// Homomorphisms ----------------------------------------------------------

Index RingHom::apply(Index a) const {
  if (coordinate_) {
    const auto* prod = source_.as<ProductImpl>();
    return prod != nullptr ? prod->component(a, *coordinate_) : a;
  }
  return table_[a];
}

Element RingHom::operator()(const Element& a) const {
  if (!(a.ring() == source_)) {
    throw Error(Errc::kRingMismatch, "hom applied outside its source ring");
  }
  return Element(target_, apply(a.index()));
}

HomReport verify_hom_table(const Ring& source, const Ring& target,
                           std::span<const Index> table) {
  HomReport report;
  const Index n = source.order();
  if (table.size() != n) {
    report.valid = false;
    report.law = "table length";
    return report;
  }
  for (Index i = 0; i < n; ++i) {
    if (table[i] >= target.order()) {
      report.valid = false;
      report.law = "table entry in range";
      report.witness = {i, i};
      return report;
    }
  }
  if (table[0] != 0) {
    report.valid = false;
    report.law = "h(0) = 0";
    report.witness = {0, 0};
    return report;
  }
  require_within_size_guard(n, "hom verification");
  // Pair (x, y) is flattened to x * n + y.
  auto bad = first_failure(
      n * n,
      [&](Index k) {
        Index x = k / n, y = k % n;
        return table[source.add(x, y)] != target.add(table[x], table[y]) ||
               table[source.mul(x, y)] != target.mul(table[x], table[y]);
      },
      default_workers(n * n));
  if (bad) {
    Index x = *bad / n, y = *bad % n;
    report.valid = false;
    report.law = table[source.add(x, y)] != target.add(table[x], table[y])
                     ? "h(x+y) = h(x)+h(y)"
                     : "h(xy) = h(x)h(y)";
    report.witness = {x, y};
  }
  return report;
}

HomReport verify_hom(const RingHom& h) {
  if (h.is_table()) return verify_hom_table(h.source(), h.target(), h.table());
  if (h.source().order() > limits().size_guard) return HomReport{};
  std::vector<Index> table(h.source().order());
  for (Index i = 0; i < table.size(); ++i) table[i] = h.apply(i);
  return verify_hom_table(h.source(), h.target(), table);
}

RingHom make_hom(Ring source, Ring target, std::vector<Index> table,
                 std::string label) {
  HomReport report = verify_hom_table(source, target, table);
  if (!report.valid) {
    std::string msg = "not a ring homomorphism: " + report.law + " fails";
    if (report.witness) {
      msg += " at (" + source.format(report.witness->first) + ", " +
             source.format(report.witness->second) + ")";
    }
    throw Error(Errc::kHomInvalid, msg);
  }
  RingHom h(std::move(source), std::move(target));
  h.unital_ = table[h.source_.one()] == h.target_.one();
  h.table_ = std::move(table);
  h.label_ = std::move(label);
  return h;
}

RingHom identity_hom(const Ring& ring) {
  std::vector<Index> table(ring.order());
  std::iota(table.begin(), table.end(), Index{0});
  return make_hom(ring, ring, std::move(table), "id");
}

RingHom make_coordinate_projection(const Ring& ring, std::size_t k) {
  const auto* impl = ring.as<ProductImpl>();
  if (impl == nullptr) {
    // A ring is the one-factor product of itself.
    if (k != 0) {
      throw Error(Errc::kInvalidParameter,
                  "coordinate index out of range for " + ring.describe());
    }
    RingHom h(ring, ring);
    h.coordinate_ = k;
    h.unital_ = true;
    h.label_ = "id";
    return h;
  }
  if (k >= impl->factors().size()) {
    throw Error(Errc::kInvalidParameter,
                "coordinate index out of range for " + ring.describe());
  }
  RingHom h(ring, impl->factors()[k]);
  h.coordinate_ = k;
  h.unital_ = true;
  h.label_ = "pr" + std::to_string(k + 1);
  return h;
}

}  // namespace pring
