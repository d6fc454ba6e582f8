// Copyright 2026 The qgames Authors
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

#ifndef QGAMES_APP_CLI_HPP_
#define QGAMES_APP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qgames::app {

// Exit codes, stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifiedFalse = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name) and returns the exit
// code. Everything goes to `out` and `err`, so tests can drive it in
// process.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qgames::app

#endif  // QGAMES_APP_CLI_HPP_
