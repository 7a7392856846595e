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

#include "pring/constructions.hpp"

#include <algorithm>

#include "pring/error.hpp"
#include "pring/limits.hpp"
#include "pring/sweep.hpp"

namespace pring {
namespace {

constexpr Index kNpos = ~Index{0};

Index shape_order(const std::vector<Index>& shape) {
  Index n = 1;
  for (Index m : shape) {
    if (m == 0) throw Error(Errc::kInvalidParameter, "cyclic order 0");
    auto next = checked_mul(n, m);
    if (!next) throw Error(Errc::kSizeGuard, "module order overflows");
    n = *next;
  }
  return n;
}

std::string format_digits(Index x, const std::vector<Index>& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(x % shape[i]);
    x /= shape[i];
  }
  return out + "]";
}

}  // namespace

// ModuleDesc -------------------------------------------------------------

ModuleDesc::ModuleDesc(Ring base, std::vector<Index> shape,
                       std::vector<Index> action, std::string label)
    : base_(std::move(base)),
      shape_(std::move(shape)),
      action_(std::move(action)),
      order_(shape_order(shape_)),
      label_(std::move(label)) {}

Index ModuleDesc::add(Index x, Index y) const {
  Index out = 0, scale = 1;
  for (Index m : shape_) {
    Index s = x % m + y % m;
    out += (s >= m ? s - m : s) * scale;
    x /= m;
    y /= m;
    scale *= m;
  }
  return out;
}

Index ModuleDesc::neg(Index x) const {
  Index out = 0, scale = 1;
  for (Index m : shape_) {
    Index d = x % m;
    out += (d == 0 ? 0 : m - d) * scale;
    x /= m;
    scale *= m;
  }
  return out;
}

std::string ModuleDesc::format(Index x) const {
  if (free_rank_ == 0) return format_digits(x, shape_);
  std::string out = "(";
  for (unsigned i = 0; i < free_rank_; ++i) {
    if (i > 0) out += ",";
    out += base_.format(x % base_.order());
    x /= base_.order();
  }
  return out + ")";
}

ModuleDesc ModuleDesc::zero(const Ring& base) {
  return ModuleDesc(base, {}, std::vector<Index>(base.order(), 0), "zero");
}

ModuleDesc ModuleDesc::free(const Ring& base, unsigned rank) {
  auto base_shape = base.impl().additive_shape();
  if (!base_shape) {
    throw Error(Errc::kInvalidParameter,
                "free module over " + base.describe() +
                    " needs a ring with a cyclic additive decomposition");
  }
  if (rank == 0) return zero(base);
  std::vector<Index> shape;
  for (unsigned i = 0; i < rank; ++i) {
    shape.insert(shape.end(), base_shape->begin(), base_shape->end());
  }
  Index n = shape_order(shape);
  auto table_size = checked_mul(n, base.order());
  if (!table_size) throw Error(Errc::kSizeGuard, "module too large");
  require_within_size_guard(*table_size, "free module action table");
  std::vector<Index> action(*table_size);
  const Index a_order = base.order();
  for (Index x = 0; x < n; ++x) {
    for (Index a = 0; a < a_order; ++a) {
      Index rest = x, out = 0, scale = 1;
      for (unsigned i = 0; i < rank; ++i) {
        out += base.mul(a, rest % a_order) * scale;
        rest /= a_order;
        scale *= a_order;
      }
      action[a + a_order * x] = out;
    }
  }
  ModuleDesc m(base, std::move(shape), std::move(action),
               "free:" + std::to_string(rank));
  m.free_rank_ = rank;
  return m;
}

ModuleDesc ModuleDesc::cyclic(const Ring& base, Index m,
                              std::vector<Index> action, std::string label) {
  return from_table(base, {m}, std::move(action), std::move(label));
}

ModuleDesc ModuleDesc::from_table(const Ring& base, std::vector<Index> shape,
                                  std::vector<Index> action,
                                  std::string label) {
  const Index n = shape_order(shape);
  const Index a_order = base.order();
  auto table_size = checked_mul(n, a_order);
  if (!table_size) throw Error(Errc::kSizeGuard, "module too large");
  require_within_size_guard(*table_size, "module action table");
  if (action.size() != *table_size) {
    throw Error(Errc::kInvalidParameter,
                "action table needs " + std::to_string(*table_size) +
                    " entries, got " + std::to_string(action.size()));
  }
  for (Index v : action) {
    if (v >= n) {
      throw Error(Errc::kInvalidParameter, "action value out of range");
    }
  }
  ModuleDesc mod(base, std::move(shape), std::move(action), std::move(label));
  auto fail = [&](const std::string& law, const std::string& where) {
    throw Error(Errc::kInvalidParameter,
                "module action law " + law + " fails at " + where);
  };
  for (Index x = 0; x < n; ++x) {
    if (mod.act(base.one(), x) != x) fail("1x = x", "x=" + mod.format(x));
  }
  for (Index a = 0; a < a_order; ++a) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (mod.act(a, mod.add(x, y)) != mod.add(mod.act(a, x), mod.act(a, y))) {
          fail("a(x+y) = ax+ay", "a=" + base.format(a) + ", x=" +
                                     mod.format(x) + ", y=" + mod.format(y));
        }
      }
    }
  }
  for (Index a = 0; a < a_order; ++a) {
    for (Index b = 0; b < a_order; ++b) {
      for (Index x = 0; x < n; ++x) {
        if (mod.act(base.add(a, b), x) != mod.add(mod.act(a, x), mod.act(b, x))) {
          fail("(a+b)x = ax+bx", "a=" + base.format(a) + ", b=" +
                                     base.format(b) + ", x=" + mod.format(x));
        }
        if (mod.act(base.mul(a, b), x) != mod.act(a, mod.act(b, x))) {
          fail("(ab)x = a(bx)", "a=" + base.format(a) + ", b=" +
                                    base.format(b) + ", x=" + mod.format(x));
        }
      }
    }
  }
  return mod;
}

// Trivial extension ------------------------------------------------------

TrivialExtImpl::TrivialExtImpl(Ring a, ModuleDesc e)
    : a_(std::move(a)), e_(std::move(e)) {
  auto order = checked_mul(a_.order(), e_.order());
  if (!order) throw Error(Errc::kSizeGuard, "trivial extension too large");
  order_ = *order;
}

Index TrivialExtImpl::add(Index x, Index y) const {
  const Index n = a_.order();
  return encode(a_.add(x % n, y % n), e_.add(x / n, y / n));
}

Index TrivialExtImpl::neg(Index x) const {
  const Index n = a_.order();
  return encode(a_.neg(x % n), e_.neg(x / n));
}

Index TrivialExtImpl::mul(Index x, Index y) const {
  const Index n = a_.order();
  Index a = x % n, e = x / n, b = y % n, f = y / n;
  return encode(a_.mul(a, b), e_.add(e_.act(a, f), e_.act(b, e)));
}

std::optional<std::vector<Index>> TrivialExtImpl::additive_shape() const {
  auto shape = a_.impl().additive_shape();
  if (!shape) return std::nullopt;
  shape->insert(shape->end(), e_.shape().begin(), e_.shape().end());
  return shape;
}

std::string TrivialExtImpl::describe() const {
  return "triv(" + a_.describe() + "," + e_.describe() + ")";
}

std::string TrivialExtImpl::format(Index x) const {
  const Index n = a_.order();
  return "(" + a_.format(x % n) + "," + e_.format(x / n) + ")";
}

Ring make_trivial_extension(const Ring& a, const ModuleDesc& e) {
  if (!(e.base() == a)) {
    throw Error(Errc::kRingMismatch, "module is over " + e.base().describe() +
                                         ", not " + a.describe());
  }
  auto order = checked_mul(a.order(), e.order());
  if (!order) throw Error(Errc::kSizeGuard, "trivial extension too large");
  require_within_size_guard(*order, "make_trivial_extension");
  Ring ring(std::make_shared<TrivialExtImpl>(a, e));
  const Index n = ring.order();
  auto bad = first_failure(
      n * n,
      [&](Index k) {
        Index x = k / n, y = k % n;
        return ring.mul(x, y) != ring.mul(y, x) ||
               (y == 0 && ring.mul(ring.one(), x) != x);
      },
      default_workers(n * n));
  if (bad) {
    throw Error(Errc::kInternalInconsistency,
                "trivial extension fails commutativity or identity at " +
                    ring.format(*bad / n));
  }
  return ring;
}

// Amalgamation -----------------------------------------------------------

void validate_amalgamation(const AmalgDesc& desc) {
  if (!(desc.hom.source() == desc.a) || !(desc.hom.target() == desc.b)) {
    throw Error(Errc::kRingMismatch, "hom must map A to B");
  }
  if (!(desc.j.ring() == desc.b)) {
    throw Error(Errc::kRingMismatch, "J must be an ideal of B");
  }
  const std::vector<Index> j = desc.j.elements();
  if (auto bad = check_ideal(desc.b, j)) {
    throw Error(Errc::kIdealInvalid,
                "J is not an ideal of " + desc.b.describe() + ": " + bad->law +
                    " fails at (" + desc.b.format(bad->a) + ", " +
                    desc.b.format(bad->b) + ")");
  }
  const Ring& b = desc.b;
  const Index f1 = desc.hom.apply(desc.a.one());
  for (Index a = 0; a < desc.a.order(); ++a) {
    Index fa = desc.hom.apply(a);
    for (Index x : j) {
      Index v = b.add(fa, x);
      if (b.mul(f1, v) != v) {
        throw Error(Errc::kIdentityConditionViolated,
                    "f(1)(f(a)+j) != f(a)+j at a=" + desc.a.format(a) +
                        ", j=" + b.format(x));
      }
    }
  }
}

AmalgamationImpl::AmalgamationImpl(AmalgDesc desc)
    : desc_(std::move(desc)), j_elems_(desc_.j.elements()) {
  j_pos_.assign(desc_.b.order(), kNpos);
  for (Index i = 0; i < j_elems_.size(); ++i) j_pos_[j_elems_[i]] = i;
  auto order = checked_mul(desc_.a.order(), j_elems_.size());
  if (!order) throw Error(Errc::kSizeGuard, "amalgamation too large");
  order_ = *order;
}

Index AmalgamationImpl::encode(Index a, Index j) const {
  Index pos = j_pos_[j];
  if (pos == kNpos) {
    throw Error(Errc::kInternalInconsistency,
                "amalgamation operation left J at " + desc_.b.format(j));
  }
  return a + desc_.a.order() * pos;
}

Index AmalgamationImpl::b_part(Index x) const {
  return desc_.b.add(desc_.hom.apply(a_part(x)), j_part(x));
}

Index AmalgamationImpl::add(Index x, Index y) const {
  return encode(desc_.a.add(a_part(x), a_part(y)),
                desc_.b.add(j_part(x), j_part(y)));
}

Index AmalgamationImpl::neg(Index x) const {
  return encode(desc_.a.neg(a_part(x)), desc_.b.neg(j_part(x)));
}

Index AmalgamationImpl::mul(Index x, Index y) const {
  // (a, f(a)+j)(a', f(a')+j') = (aa', f(aa') + f(a)j' + f(a')j + jj').
  const Ring& b = desc_.b;
  Index a = a_part(x), a2 = a_part(y);
  Index j = j_part(x), j2 = j_part(y);
  Index fa = desc_.hom.apply(a), fa2 = desc_.hom.apply(a2);
  Index jj = b.add(b.add(b.mul(fa, j2), b.mul(fa2, j)), b.mul(j, j2));
  return encode(desc_.a.mul(a, a2), jj);
}

std::string AmalgamationImpl::describe() const {
  return "amalg(" + desc_.a.describe() + "," + desc_.b.describe() + "," +
         desc_.hom.label() + "," + desc_.j.to_string() + ")";
}

std::string AmalgamationImpl::format(Index x) const {
  return "(" + desc_.a.format(a_part(x)) + "," + desc_.b.format(b_part(x)) +
         ")";
}

Ring make_amalgamation(const AmalgDesc& desc) {
  validate_amalgamation(desc);
  auto order = checked_mul(desc.a.order(), desc.j.size());
  if (!order) throw Error(Errc::kSizeGuard, "amalgamation too large");
  require_within_size_guard(*order, "make_amalgamation");
  auto impl = std::make_shared<AmalgamationImpl>(desc);
  Ring ring(impl);
  // Closure: the B-coordinate of every sum and product must be f(a'') + j''
  // with j'' in J. Checked directly in B, independent of the encoding.
  const Ring& a = desc.a;
  const Ring& b = desc.b;
  const Index n = ring.order();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      Index bx = impl->b_part(x), by = impl->b_part(y);
      Index sum_a = a.add(impl->a_part(x), impl->a_part(y));
      Index prod_a = a.mul(impl->a_part(x), impl->a_part(y));
      Index sum_j = b.sub(b.add(bx, by), desc.hom.apply(sum_a));
      Index prod_j = b.sub(b.mul(bx, by), desc.hom.apply(prod_a));
      if (!desc.j.contains(sum_j) || !desc.j.contains(prod_j)) {
        throw Error(Errc::kInternalInconsistency,
                    "amalgamation not closed at (" + ring.format(x) + ", " +
                        ring.format(y) + ")");
      }
    }
    if (ring.mul(ring.one(), x) != x) {
      throw Error(Errc::kIdentityConditionViolated,
                  "(1, f(1)) is not an identity at " + ring.format(x));
    }
  }
  return ring;
}

Ring make_duplication(const Ring& a, const IdealDesc& i) {
  return make_amalgamation(AmalgDesc{a, a, identity_hom(a), i});
}

RingHom amalgamation_projection(const Ring& amalgamation) {
  const auto* impl = amalgamation.as<AmalgamationImpl>();
  if (impl == nullptr) {
    throw Error(Errc::kInvalidParameter, "not an amalgamation");
  }
  std::vector<Index> table(amalgamation.order());
  for (Index x = 0; x < table.size(); ++x) table[x] = impl->a_part(x);
  return make_hom(amalgamation, impl->desc().a, std::move(table), "proj_A");
}

RingHom make_scale0_hom(const Ring& a, const Ring& b, std::int64_t k) {
  require_within_size_guard(a.order(), "scale0 hom");
  const auto* prod = a.as<ProductImpl>();
  std::vector<Index> table(a.order());
  for (Index x = 0; x < a.order(); ++x) {
    Index a0 = prod != nullptr ? prod->component(x, 0) : x;
    Index scaled = b.int_mul(k, b.one());
    table[x] = b.int_mul_unsigned(a0, scaled);
  }
  return make_hom(a, b, std::move(table), "scale0:" + std::to_string(k));
}

}  // namespace pring
