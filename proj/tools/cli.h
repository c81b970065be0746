// Copyright 2026 The propaudit Authors
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

#ifndef PROPAUDIT_TOOLS_CLI_H_
#define PROPAUDIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace propaudit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitSatisfied = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitError = 2;

// Runs the tool on args (without the program name). Reports go to out,
// diagnostics to err.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace propaudit::cli

#endif  // PROPAUDIT_TOOLS_CLI_H_
