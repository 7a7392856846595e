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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pring/cli/commands.hpp"
#include "pring/limits.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring toolkit: p-rings, p-ideals, regularity"};
  app.require_subcommand(1);

  pring::cli::CommandArgs args;
  std::uint64_t p = 0;
  bool json = false;
  pring::Limits limits = pring::limits();

  struct Sub {
    pring::cli::Command cmd;
    const char* help;
    const char* input_help;
  };
  const Sub subs[] = {
      {pring::cli::Command::kCheck, "p-ring and regularity verdicts",
       "ring expression"},
      {pring::cli::Command::kIdeals, "list the p-ideals", "ring expression"},
      {pring::cli::Command::kDecompose,
       "decompose a p-ring as GF(p)^n", "ring expression"},
      {pring::cli::Command::kVerify,
       "run fast paths and oracles and compare them", "ring expression"},
      {pring::cli::Command::kFactor,
       "factor a polynomial over GF(p) and list its roots",
       "polynomial, e.g. x^3+2x"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(s.cmd)), s.help);
    sub->add_option("input", args.input, s.input_help)->required();
    sub->add_option("--p", p, "prime p")->required();
    sub->add_flag("--json", json, "machine-readable report");
    sub->add_option("--size-guard", limits.size_guard,
                    "largest ring materialized element by element");
    sub->add_option("--oracle-guard", limits.oracle_guard,
                    "largest ring whose ideal lattice is enumerated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : pring::cli::kExitUsage;
  }

  pring::set_limits(limits);
  args.p = p;
  CLI::App* chosen = app.get_subcommands().front();
  auto cmd = pring::cli::parse_command(chosen->get_name());
  pring::cli::CommandResult result = pring::cli::run_command(*cmd, args);
  if (json) {
    std::cout << result.json.dump(2) << "\n";
  } else if (result.exit_code == pring::cli::kExitOk ||
             result.exit_code == pring::cli::kExitDisagreement) {
    std::cout << result.text;
  } else {
    std::cerr << result.text;
  }
  return result.exit_code;
}
