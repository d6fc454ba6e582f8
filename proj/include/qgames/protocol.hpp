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

#ifndef QGAMES_PROTOCOL_HPP_
#define QGAMES_PROTOCOL_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qgames/games.hpp"
#include "qgames/qcore.hpp"
#include "qgames/strategies.hpp"

namespace qgames {

enum class Mode {
  // |0..0> -> J -> local strategies -> J^dagger -> measure.
  kEntangled,
  // J and J^dagger replaced by X^r on every qubit, r a shared fair coin.
  kDecoherent,
  // Independent bits, no correlation at all.
  kClassical,
};

struct ProtocolConfig {
  Mode mode = Mode::kEntangled;
  // Final J^dagger (entangled) or final X^r layer (decoherent). Ignored in
  // classical mode.
  bool apply_final_gate = true;
};

struct GameResult {
  Distribution distribution;
  std::vector<double> expected_payoffs;
};

// Plays one round. Uses the pure-state path when every strategy is
// coherent and the density-operator path otherwise. In classical mode each
// strategy acts through its effective flip probability.
GameResult play(const PayoffTable& table, const StrategyProfile& profile,
                const ProtocolConfig& config = {});

// Register state after J and the local unitaries, with J^dagger applied
// unless `before_final_gate`. Throws if any strategy is not coherent.
StateVector final_state(const StrategyProfile& profile,
                        bool before_final_gate = false);

// Exact two-branch average over the shared classical bit.
GameResult play_decoherent(const PayoffTable& table,
                           const StrategyProfile& profile,
                           bool apply_final_layer = true);

// Closed-form probability that each of three players ends up in the
// minority, for strategies in the two-angle parameterization.
std::array<double, 3> prob_minority3_closed_form(
    std::span<const TwoAngleParams> params);

// Payoff of one player as a function of that player's strategy, everyone
// else held fixed. The fixed part of the circuit is computed once, which
// makes repeated evaluation cheap enough for best-response search.
class DeviationEvaluator {
 public:
  DeviationEvaluator(const PayoffTable& table, const StrategyProfile& profile,
                     int player, const ProtocolConfig& config = {});

  double payoff(const Strategy& strategy) const;
  double payoff(const Mat2& unitary) const;
  // `kraus` must be trace preserving; not re-validated.
  double payoff(std::span<const Mat2> kraus) const;

  Distribution distribution(std::span<const Mat2> kraus) const;

  int player() const { return player_; }

 private:
  enum class Post { kNone, kEntanglerAdjoint, kGlobalFlip };
  struct Branch {
    double weight;
    Post post;
    std::optional<ComplexVector> pure;
    std::optional<DensityOperator> mixed;
  };

  PayoffTable table_;
  int player_;
  int n_;
  Mode mode_;
  std::vector<Branch> branches_;
  std::vector<double> classical_flips_;
};

}  // namespace qgames

#endif  // QGAMES_PROTOCOL_HPP_
