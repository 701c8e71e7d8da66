// Copyright 2026 The trimof Authors
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

#ifndef TRIMOF_TOOLS_CLI_H_
#define TRIMOF_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace trimof::cli {

// Exit statuses of Execute.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one subcommand. `args` excludes the program name, e.g.
// {"mine", "--data", "x.csv", "--out", "run"}. Artifacts go to the output
// directory; diagnostics are a single `Name: message` line on `err`.
int Execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace trimof::cli

#endif  // TRIMOF_TOOLS_CLI_H_
