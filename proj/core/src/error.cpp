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

#include "pring/error.hpp"

namespace pring {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidParameter: return "invalid-parameter";
    case Errc::kRingMismatch: return "ring-mismatch";
    case Errc::kHomInvalid: return "hom-invalid";
    case Errc::kModulusMismatch: return "modulus-mismatch";
    case Errc::kDivisionByZero: return "division-error";
    case Errc::kUndefinedGcd: return "undefined-gcd";
    case Errc::kSizeGuard: return "size-guard";
    case Errc::kIdealInvalid: return "ideal-invalid";
    case Errc::kIdentityConditionViolated: return "identity-condition-violated";
    case Errc::kPreconditionViolated: return "precondition-violated";
    case Errc::kDegenerateInput: return "degenerate-input";
    case Errc::kUnsupportedDegenerate: return "unsupported-degenerate";
    case Errc::kInternalInconsistency: return "internal-inconsistency";
    case Errc::kParse: return "parse-error";
  }
  return "unknown";
}

namespace {

std::string parse_message(std::size_t offset,
                          const std::vector<std::string>& expected,
                          const std::string& detail) {
  std::string msg = "parse error at offset " + std::to_string(offset);
  if (!detail.empty()) msg += ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(Errc::kParse, parse_message(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace pring
