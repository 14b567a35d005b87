// Copyright 2026 The projopt Authors
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

#ifndef PROJOPT_TOOLS_COMMANDS_HPP_
#define PROJOPT_TOOLS_COMMANDS_HPP_

#include <ostream>

namespace projopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// the report to out and diagnostics to err.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace projopt::cli

#endif  // PROJOPT_TOOLS_COMMANDS_HPP_
