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

#ifndef QGAMES_NELDER_MEAD_HPP_
#define QGAMES_NELDER_MEAD_HPP_

#include <functional>
#include <span>
#include <vector>

namespace qgames {

struct NelderMeadOptions {
  int max_iterations = 2000;
  // Stop once the simplex's objective spread falls below this.
  double tolerance = 1e-10;
  double initial_step = 0.5;
  // Rebuilds of the simplex around the incumbent after convergence; guards
  // against the simplex collapsing on a ridge.
  int max_reinitializations = 2;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Maximizes `objective` from `start` with the dimension-adaptive
// coefficients of Gao & Han. Non-finite objective values rank as worst.
NelderMeadResult maximize_nelder_mead(const Objective& objective,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options = {});

}  // namespace qgames

#endif  // QGAMES_NELDER_MEAD_HPP_
