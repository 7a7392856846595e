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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace pring::cli {

enum class Command { kCheck, kIdeals, kDecompose, kVerify, kFactor };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

struct CommandArgs {
  // Ring expression, or polynomial text for `factor`.
  std::string input;
  std::optional<std::uint64_t> p;
  std::filesystem::path base_dir = ".";
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
  nlohmann::ordered_json json;
};

// Never throws for user-facing failures; they become exit codes 2/3 with a
// diagnostic in both renderings.
CommandResult run_command(Command cmd, const CommandArgs& args);

}  // namespace pring::cli
