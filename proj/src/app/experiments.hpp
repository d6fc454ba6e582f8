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

#ifndef QGAMES_APP_EXPERIMENTS_HPP_
#define QGAMES_APP_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "app/report.hpp"
#include "qgames/error.hpp"

namespace qgames::app {

struct ExperimentOptions {
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iterations = 2000;
  double epsilon = 1e-6;
  std::optional<std::filesystem::path> table;
};

// Raised when an experiment needs a payoff table that was not supplied.
class MissingTableError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string>& experiment_names();
bool experiment_needs_table(std::string_view name);

// Runs every check of one experiment into `report`. Throws Error for
// unknown names and MissingTableError when --table is required.
void run_experiment(std::string_view name, const ExperimentOptions& options,
                    Report& report);

}  // namespace qgames::app

#endif  // QGAMES_APP_EXPERIMENTS_HPP_
