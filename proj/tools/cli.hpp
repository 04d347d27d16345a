// Copyright 2026 The Orbigrpd Authors
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

#ifndef ORBI_TOOLS_CLI_HPP_
#define ORBI_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace orbi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// File name and contents of every file in the shipped fixture corpus.
std::vector<std::pair<std::string, std::string>> fixture_corpus();

}  // namespace orbi::cli

#endif  // ORBI_TOOLS_CLI_HPP_
