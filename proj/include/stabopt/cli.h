// Copyright 2026 The stabopt Authors
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

#ifndef STABOPT_CLI_H
#define STABOPT_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace stabopt {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitInfeasible = 3, kExitBudget = 4 };

/// Runs the command line (without the program name). Results go to `out`;
/// diagnostics and, unless --manifest is given, the run manifest go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace stabopt

#endif
