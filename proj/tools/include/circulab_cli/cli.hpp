// Copyright 2026 The circulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCULAB_CLI_CLI_HPP_
#define CIRCULAB_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace circulab::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kRuntimeError = 2 };

// Top-level subcommands in the order they appear in --help.
const std::vector<std::string>& subcommand_names();
// Actions under `singularity`.
const std::vector<std::string>& singularity_actions();

// Every (subcommand path, long flag) pair the parser accepts, read back from
// the constructed parser, e.g. {"singularity witness", "--signs"}.
std::vector<std::pair<std::string, std::string>> registered_flags();

// Parses `args` (without the program name), runs the command, writes
// numeric output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circulab::cli

#endif  // CIRCULAB_CLI_CLI_HPP_
