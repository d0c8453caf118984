// Copyright 2026 The subsys Authors
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


#ifndef SUBSYS_TOOLS_CLI_H
#define SUBSYS_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "subsys/error.h"

namespace subsys::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitResource = 4;

int exit_code_for(ErrorCategory category);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// The reproduction table, as printed by `subsys paper-table`.
std::string paper_table(unsigned jobs);

}  // namespace subsys::cli

#endif
