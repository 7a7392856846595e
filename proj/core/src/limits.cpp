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

#include "pring/limits.hpp"

#include <atomic>
#include <string>

#include "pring/error.hpp"

namespace pring {
namespace {

std::atomic<Index> g_size_guard{Limits{}.size_guard};
std::atomic<Index> g_oracle_guard{Limits{}.oracle_guard};

void require_within(Index order, Index cap, const char* what,
                    const char* name) {
  if (order > cap) {
    throw Error(Errc::kSizeGuard, std::string(what) + ": " +
                                      std::to_string(order) +
                                      " elements exceeds " + name + " of " +
                                      std::to_string(cap));
  }
}

}  // namespace

Limits limits() {
  return Limits{g_size_guard.load(), g_oracle_guard.load()};
}

void set_limits(Limits l) {
  g_size_guard.store(l.size_guard);
  g_oracle_guard.store(l.oracle_guard);
}

void require_within_size_guard(Index order, const char* what) {
  require_within(order, g_size_guard.load(), what, "size guard");
}

void require_within_oracle_guard(Index order, const char* what) {
  require_within(order, g_oracle_guard.load(), what, "oracle guard");
}

}  // namespace pring
