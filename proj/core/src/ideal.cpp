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

#include "pring/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "pring/error.hpp"
#include "pring/limits.hpp"
#include "pring/quotient.hpp"

namespace pring {
namespace {

std::string render_set(const Ring& ring, std::span<const Index> elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ",";
    out += ring.format(elems[i]);
  }
  return out + "}";
}

}  // namespace

std::optional<IdealViolation> check_ideal(const Ring& ring,
                                          std::span<const Index> sorted) {
  require_within_size_guard(ring.order(), "ideal verification");
  std::vector<bool> member(ring.order(), false);
  for (Index a : sorted) {
    if (a >= ring.order()) return IdealViolation{"index in range", a, a};
    member[a] = true;
  }
  if (sorted.empty() || !member[0]) return IdealViolation{"contains 0", 0, 0};
  for (Index a : sorted) {
    for (Index b : sorted) {
      if (!member[ring.add(a, b)]) return IdealViolation{"a+b in I", a, b};
    }
  }
  for (Index a : sorted) {
    for (Index r = 0; r < ring.order(); ++r) {
      if (!member[ring.mul(r, a)]) return IdealViolation{"r*a in I", r, a};
    }
  }
  return std::nullopt;
}

std::vector<Index> ideal_sum(const Ring& ring, std::span<const Index> a,
                             std::span<const Index> b) {
  std::vector<bool> member(ring.order(), false);
  std::vector<Index> group(a.begin(), a.end());
  for (Index x : group) member[x] = true;
  for (Index j : b) {
    if (member[j]) continue;
    // group + <j> is the union of the cosets group + k*j.
    const std::vector<Index> base = group;
    Index step = j;
    while (!member[step]) {
      for (Index g : base) {
        Index s = ring.add(g, step);
        if (!member[s]) {
          member[s] = true;
          group.push_back(s);
        }
      }
      step = ring.add(step, j);
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

IdealDesc IdealDesc::zmod_multiples(const Ring& ring, Index k) {
  const auto* z = ring.as<ZmodImpl>();
  if (z == nullptr) {
    throw Error(Errc::kInvalidParameter, "kZ/nZ form needs a Z/nZ ring");
  }
  Index n = z->modulus();
  if (k == n) k = 0;
  if (k != 0 && n % k != 0) {
    throw Error(Errc::kIdealInvalid, "kZ/nZ form needs k | n");
  }
  return IdealDesc(ring, ZmodMultiples{k});
}

IdealDesc IdealDesc::quotient_divisor(const Ring& ring, const FpPoly& g) {
  const auto* q = ring.as<QuotientImpl>();
  if (q == nullptr) {
    throw Error(Errc::kInvalidParameter, "divisor form needs a quotient ring");
  }
  if (g.is_zero() || !divides(g, q->modulus())) {
    throw Error(Errc::kIdealInvalid,
                "divisor form needs g | " + q->modulus().to_string());
  }
  return IdealDesc(ring, QuotientDivisor{g.monic()});
}

IdealDesc IdealDesc::product_of(const Ring& ring,
                                std::vector<IdealDesc> parts) {
  const auto* prod = ring.as<ProductImpl>();
  if (prod == nullptr || prod->factors().size() != parts.size()) {
    throw Error(Errc::kInvalidParameter,
                "component form needs one ideal per product factor");
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!(parts[k].ring() == prod->factors()[k])) {
      throw Error(Errc::kRingMismatch, "component ideal in the wrong ring");
    }
  }
  return IdealDesc(ring, ProductOf{std::move(parts)});
}

IdealDesc IdealDesc::extensional(const Ring& ring,
                                 std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (auto bad = check_ideal(ring, elements)) {
    throw Error(Errc::kIdealInvalid,
                "not an ideal of " + ring.describe() + ": " + bad->law +
                    " fails at (" + ring.format(bad->a) + ", " +
                    ring.format(bad->b) + ")");
  }
  return IdealDesc(ring, Extensional{std::move(elements)});
}

IdealDesc IdealDesc::generated_by(const Ring& ring,
                                  std::span<const Index> gens) {
  require_within_size_guard(ring.order(), "ideal generation");
  std::vector<Index> acc{0};
  for (Index g : gens) {
    if (g >= ring.order()) {
      throw Error(Errc::kInvalidParameter,
                  "generator index " + std::to_string(g) + " out of range");
    }
    std::vector<Index> principal(ring.order());
    for (Index r = 0; r < ring.order(); ++r) principal[r] = ring.mul(r, g);
    std::sort(principal.begin(), principal.end());
    principal.erase(std::unique(principal.begin(), principal.end()),
                    principal.end());
    acc = ideal_sum(ring, acc, principal);
  }
  return IdealDesc(ring, Extensional{std::move(acc)});
}

IdealDesc IdealDesc::zero(const Ring& ring) {
  return IdealDesc(ring, Extensional{{0}});
}

IdealDesc IdealDesc::whole(const Ring& ring) {
  require_within_size_guard(ring.order(), "whole-ring ideal");
  std::vector<Index> all(ring.order());
  std::iota(all.begin(), all.end(), Index{0});
  return IdealDesc(ring, Extensional{std::move(all)});
}

std::vector<Index> IdealDesc::elements() const {
  return std::visit(
      [&](const auto& r) -> std::vector<Index> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ZmodMultiples>) {
          if (r.k == 0) return {0};
          Index n = ring_.order();
          require_within_size_guard(n / r.k, "ideal expansion");
          std::vector<Index> out;
          for (Index a = 0; a < n; a += r.k) out.push_back(a);
          return out;
        } else if constexpr (std::is_same_v<T, QuotientDivisor>) {
          const auto* q = ring_.as<QuotientImpl>();
          // Multiples h*g with deg h < deg f - deg g are exactly the ideal.
          std::size_t free_deg = q->degree() - *r.g.degree();
          auto count = checked_pow(q->prime(), free_deg);
          if (!count) throw Error(Errc::kSizeGuard, "ideal too large");
          require_within_size_guard(*count, "ideal expansion");
          std::vector<Index> out;
          out.reserve(*count);
          for (Index h = 0; h < *count; ++h) {
            out.push_back(
                q->encode(FpPoly::from_index(q->prime(), h) * r.g));
          }
          std::sort(out.begin(), out.end());
          return out;
        } else if constexpr (std::is_same_v<T, ProductOf>) {
          const auto* prod = ring_.as<ProductImpl>();
          std::vector<Index> out{0};
          Index stride = 1;
          for (std::size_t k = 0; k < r.parts.size(); ++k) {
            std::vector<Index> next;
            for (Index c : r.parts[k].elements()) {
              for (Index base : out) next.push_back(base + c * stride);
            }
            require_within_size_guard(next.size(), "ideal expansion");
            out = std::move(next);
            stride *= prod->factors()[k].order();
          }
          std::sort(out.begin(), out.end());
          return out;
        } else {
          return r.elements;
        }
      },
      repr_);
}

Index IdealDesc::size() const {
  return std::visit(
      [&](const auto& r) -> Index {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ZmodMultiples>) {
          return r.k == 0 ? 1 : ring_.order() / r.k;
        } else if constexpr (std::is_same_v<T, QuotientDivisor>) {
          const auto* q = ring_.as<QuotientImpl>();
          return *checked_pow(q->prime(), q->degree() - *r.g.degree());
        } else if constexpr (std::is_same_v<T, ProductOf>) {
          Index s = 1;
          for (const auto& part : r.parts) s *= part.size();
          return s;
        } else {
          return r.elements.size();
        }
      },
      repr_);
}

bool IdealDesc::contains(Index a) const {
  if (const auto* z = std::get_if<ZmodMultiples>(&repr_)) {
    return z->k == 0 ? a == 0 : a % z->k == 0;
  }
  if (const auto* e = std::get_if<Extensional>(&repr_)) {
    return std::binary_search(e->elements.begin(), e->elements.end(), a);
  }
  if (const auto* q = std::get_if<QuotientDivisor>(&repr_)) {
    const auto* impl = ring_.as<QuotientImpl>();
    return divides(q->g, impl->residue(a));
  }
  const auto& parts = std::get<ProductOf>(repr_).parts;
  const auto* prod = ring_.as<ProductImpl>();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].contains(prod->component(a, k))) return false;
  }
  return true;
}

IdealDesc IdealDesc::to_extensional() const {
  return IdealDesc(ring_, Extensional{elements()});
}

std::string IdealDesc::to_string() const {
  return std::visit(
      [&](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ZmodMultiples>) {
          std::string n = std::to_string(ring_.order());
          if (r.k == 0) return "(0)";
          if (r.k == 1) return "Z/" + n + "Z";
          return std::to_string(r.k) + "Z/" + n + "Z";
        } else if constexpr (std::is_same_v<T, QuotientDivisor>) {
          const auto* q = ring_.as<QuotientImpl>();
          if (q != nullptr && r.g == q->modulus()) return "(0)";
          return "(" + r.g.to_string() + ")";
        } else if constexpr (std::is_same_v<T, ProductOf>) {
          std::string out;
          for (std::size_t k = 0; k < r.parts.size(); ++k) {
            if (k > 0) out += " x ";
            out += r.parts[k].to_string();
          }
          return out;
        } else {
          if (r.elements.size() == 1) return "(0)";
          return render_set(ring_, r.elements);
        }
      },
      repr_);
}

bool operator==(const IdealDesc& a, const IdealDesc& b) {
  return a.ring_ == b.ring_ && a.elements() == b.elements();
}

}  // namespace pring
