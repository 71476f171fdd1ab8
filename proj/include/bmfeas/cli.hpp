// Copyright 2026 The bmfeas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMFEAS_CLI_HPP
#define BMFEAS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bmfeas {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// solve found no witness, verify rejected, or xor-demo mismatched.
  kExitNegative = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the tool with `args` (excluding the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmfeas

#endif  // BMFEAS_CLI_HPP
