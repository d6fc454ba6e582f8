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

#ifndef QGAMES_EQUILIBRIA_HPP_
#define QGAMES_EQUILIBRIA_HPP_

#include <cstdint>
#include <vector>

#include "qgames/games.hpp"
#include "qgames/protocol.hpp"
#include "qgames/strategies.hpp"

namespace qgames {

enum class StrategyClass {
  // Local unitaries, searched as normalized quaternions.
  kUnitary,
  // All qubit channels, searched through a rank-4 Stinespring isometry.
  kChannel,
};

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  double tolerance = 1e-10;
  std::uint64_t rng_seed = 0;
};

// Terminal point of one optimizer start, kept for strictness analysis.
struct RestartOutcome {
  Strategy strategy;
  double value;
};

struct BestResponseResult {
  Strategy strategy;
  double value;
  double incumbent_value;
  // value - incumbent_value; never below -1e-9.
  double improvement;
  // Restart 0 is seeded at the incumbent, the rest at random.
  std::vector<RestartOutcome> restarts;
};

struct PlayerNashEntry {
  double current_payoff;
  double best_response_value;
  double improvement;
  Strategy best_response;
  bool strict;
};

struct NashReport {
  std::vector<PlayerNashEntry> players;
  double epsilon;
  bool is_nash;

  double max_improvement() const;
};

inline constexpr double kDefaultEpsilon = 1e-6;
// Choi-matrix distance below which two near-optimal strategies count as the
// same move when judging strictness.
inline constexpr double kStrictnessDistance = 1e-2;

// Multi-start Nelder-Mead over the player's strategy class. In classical
// mode the payoff is linear in the player's flip probability, so the exact
// best pure action is returned instead.
BestResponseResult best_response(const PayoffTable& table,
                                 const StrategyProfile& profile, int player,
                                 StrategyClass strategy_class,
                                 const OptimizerConfig& config = {},
                                 const ProtocolConfig& protocol = {});

// Best response for every player. A player is strict when no restart
// reached within epsilon of the incumbent payoff at a strategy further than
// kStrictnessDistance from the incumbent, and the player cannot improve.
NashReport verify_nash(const PayoffTable& table, const StrategyProfile& profile,
                       StrategyClass strategy_class,
                       double epsilon = kDefaultEpsilon,
                       const OptimizerConfig& config = {},
                       const ProtocolConfig& protocol = {});

// Marginal over the other players of the pre-J^dagger register when
// `player` plays `deviation` instead of their profile entry. By
// no-signalling this does not depend on `deviation`.
Distribution deviation_marginal(const StrategyProfile& profile, int player,
                                const Strategy& deviation);

// Upper bound on what `player` can earn against the others' (unitary)
// strategies with any channel: sum_y P(y) max_x payoff(x merged into y) over
// the others' marginal y. Valid for flip-symmetric tables only.
double payoff_upper_bound(const PayoffTable& table,
                          const StrategyProfile& profile, int player);

struct SampledProfileEntry {
  StrategyProfile profile;
  bool forced;
  std::vector<double> improvements;
  bool improvable;
};

struct SampledEquilibriumReport {
  std::vector<SampledProfileEntry> entries;
  int improvable_count;
  double fraction_improvable;
};

// Samples Haar-random unitary profiles of a two-player game (plus any
// `forced` ones) and checks whether some player has a unitary deviation
// worth more than epsilon.
SampledEquilibriumReport sampled_no_unitary_equilibrium(
    const PayoffTable& table, int samples, const OptimizerConfig& config = {},
    double epsilon = kDefaultEpsilon,
    const std::vector<StrategyProfile>& forced = {});

// Haar-random SU(2) strategy and a random channel, both seeded by the
// caller's engine.
template <typename Engine>
Strategy random_unitary_strategy(Engine& rng);
template <typename Engine>
Strategy random_channel_strategy(Engine& rng);

}  // namespace qgames

#include "qgames/random_strategies.inl"

#endif  // QGAMES_EQUILIBRIA_HPP_
