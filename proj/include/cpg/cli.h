// Copyright 2026 The CPG Authors
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

#ifndef CPG_CLI_H_
#define CPG_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cpg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolated = 1,
  kUsageError = 2,
  kLimitExceeded = 3,
};

struct Environment {
  // Value of CPG_LIMIT, if set. Overrides every default enumeration limit;
  // an explicit --limit wins over it.
  std::optional<std::string> cpg_limit;

  static Environment FromProcess();
};

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env = {});

}  // namespace cpg::cli

#endif  // CPG_CLI_H_
