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

// Random strategy generators; included from equilibria.hpp.

#include <array>
#include <random>

namespace qgames {

template <typename Engine>
Strategy random_unitary_strategy(Engine& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion q{0, 0, 0, 0};
  double norm = 0.0;
  while (norm < 1e-6) {
    q = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    norm = q.norm();
  }
  return su2_from_quaternion({q.n0 / norm, q.n1 / norm, q.n2 / norm, q.n3 / norm});
}

template <typename Engine>
Strategy random_channel_strategy(Engine& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, kStinespringParams> params;
  for (double& p : params) p = gauss(rng);
  return channel_from_stinespring(params);
}

}  // namespace qgames
