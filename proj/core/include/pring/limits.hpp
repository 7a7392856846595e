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

#include "pring/numeric.hpp"

namespace pring {

// Process-wide caps on materialization. size_guard bounds rings that are
// built element-by-element (quotients, extensions, amalgamations) and every
// exhaustive sweep; oracle_guard bounds ideal-lattice enumeration.
struct Limits {
  Index size_guard = 4096;
  Index oracle_guard = 256;
};

Limits limits();
void set_limits(Limits l);

// Throws kSizeGuard if order exceeds the relevant cap.
void require_within_size_guard(Index order, const char* what);
void require_within_oracle_guard(Index order, const char* what);

// Restores the previous limits on scope exit.
class ScopedLimits {
 public:
  explicit ScopedLimits(Limits l) : saved_(limits()) { set_limits(l); }
  ~ScopedLimits() { set_limits(saved_); }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace pring
