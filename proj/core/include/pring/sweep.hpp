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

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

#include "pring/numeric.hpp"

namespace pring {

// Smallest i in [0, count) with fails(i), or nullopt. The range is split into
// `workers` contiguous chunks; the answer is the global minimum regardless of
// the split. `fails` must be safe to call concurrently.
template <typename Pred>
std::optional<Index> first_failure(Index count, Pred&& fails,
                                   unsigned workers = 1) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < workers) {
    for (Index i = 0; i < count; ++i) {
      if (fails(i)) return i;
    }
    return std::nullopt;
  }
  std::vector<std::optional<Index>> found(workers);
  {
    std::vector<std::jthread> pool;
    Index chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      Index lo = std::min(count, w * chunk);
      Index hi = std::min(count, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        for (Index i = lo; i < hi; ++i) {
          if (fails(i)) {
            found[w] = i;
            return;
          }
        }
      });
    }
  }
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

// Worker count for exhaustive sweeps of the given size.
inline unsigned default_workers(Index count) {
  if (count < (Index{1} << 16)) return 1;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace pring
