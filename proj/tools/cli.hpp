// Copyright 2026 The Metamour Authors
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

// Command-line front end. Talks to the library only through metamour.h.

#ifndef METAMOUR_TOOLS_CLI_HPP_
#define METAMOUR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace metamour_cli {

enum ExitCode { kExitPass = 0, kExitTheoremFailure = 1, kExitUsage = 2 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metamour_cli

#endif  // METAMOUR_TOOLS_CLI_HPP_
