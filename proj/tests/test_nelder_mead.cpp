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

#include "qgames/nelder_mead.hpp"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"

namespace qgames {
namespace {

TEST(NelderMead, ConcaveQuadratic) {
  const auto f = [](std::span<const double> x) {
    return -(x[0] - 1.0) * (x[0] - 1.0) - 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 3.0;
  };
  const auto r = maximize_nelder_mead(f, {0.0, 0.0});
  EXPECT_NEAR(r.value, 3.0, 1e-9);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], -2.0, 1e-4);
  EXPECT_GT(r.evaluations, 0);
}

TEST(NelderMead, NeverWorseThanTheStart) {
  const auto f = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::cos(3.0 * v);
    return s;
  };
  std::vector<double> start(12, 0.3);
  const double f0 = f(start);
  const auto r = maximize_nelder_mead(f, start);
  EXPECT_GE(r.value, f0);
  EXPECT_EQ(r.value, f(r.x));
}

TEST(NelderMead, NonFiniteValuesRankWorst) {
  const auto f = [](std::span<const double> x) {
    if (x[0] < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return -(x[0] - 0.5) * (x[0] - 0.5);
  };
  const auto r = maximize_nelder_mead(f, {0.1});
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_NEAR(r.x[0], 0.5, 1e-4);
}

TEST(NelderMead, IterationCapIsHonoured) {
  NelderMeadOptions o;
  o.max_iterations = 5;
  o.max_reinitializations = 0;
  const auto f = [](std::span<const double> x) { return -x[0] * x[0] - x[1] * x[1]; };
  EXPECT_LE(maximize_nelder_mead(f, {3.0, 3.0}, o).iterations, 5);
}

}  // namespace
}  // namespace qgames
