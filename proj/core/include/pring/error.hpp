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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pring {

enum class Errc {
  kInvalidParameter,
  kRingMismatch,
  kHomInvalid,
  kModulusMismatch,
  kDivisionByZero,
  kUndefinedGcd,
  kSizeGuard,
  kIdealInvalid,
  kIdentityConditionViolated,
  kPreconditionViolated,
  kDegenerateInput,
  kUnsupportedDegenerate,
  kInternalInconsistency,
  kParse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Syntax error in polynomial text or a ring expression. `offset` is a byte
// offset into the full input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace pring
