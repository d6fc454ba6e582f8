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

#include "qgames/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qgames/nelder_mead.hpp"

namespace qgames {

namespace {

constexpr double kIncumbentFloor = 1e-9;
constexpr double kInitialStep = 0.5;

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

std::vector<double> gaussian_point(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(dim);
  for (double& v : x) v = gauss(rng);
  return x;
}

// Maps raw optimizer parameters to a strategy of the searched class.
class Parameterization {
 public:
  explicit Parameterization(StrategyClass cls) : cls_(cls) {}

  std::size_t dim() const {
    return cls_ == StrategyClass::kUnitary ? 4 : kStinespringParams;
  }

  // Start vector that reproduces `incumbent`, if it lies in the class.
  std::optional<std::vector<double>> encode(const Strategy& incumbent) const {
    if (cls_ == StrategyClass::kUnitary) {
      const auto u = incumbent.as_unitary();
      if (!u) return std::nullopt;
      const Quaternion q = quaternion_from_unitary(*u);
      return std::vector<double>{q.n0, q.n1, q.n2, q.n3};
    }
    const auto kraus = incumbent.kraus();
    if (kraus.size() > static_cast<std::size_t>(kStinespringEnvDim)) {
      return std::nullopt;
    }
    const auto params = stinespring_params(kraus);
    return std::vector<double>(params.begin(), params.end());
  }

  std::optional<Strategy> decode(std::span<const double> x) const {
    if (cls_ == StrategyClass::kUnitary) {
      const double norm =
          std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
      if (!(norm > 1e-12) || !std::isfinite(norm)) return std::nullopt;
      return Strategy::unitary(
          su2_matrix({x[0] / norm, x[1] / norm, x[2] / norm, x[3] / norm}));
    }
    try {
      return channel_from_stinespring(x);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

 private:
  StrategyClass cls_;
};

BestResponseResult classical_best_response(const DeviationEvaluator& eval,
                                           const Strategy& incumbent) {
  const double incumbent_value = eval.payoff(incumbent);
  std::vector<RestartOutcome> outcomes;
  for (int bit : {0, 1}) {
    const Strategy s = Strategy::pure(bit);
    outcomes.push_back({s, eval.payoff(s)});
  }
  const auto best = std::max_element(
      outcomes.begin(), outcomes.end(),
      [](const auto& a, const auto& b) { return a.value < b.value; });
  BestResponseResult result{best->strategy, best->value, incumbent_value,
                            best->value - incumbent_value, outcomes};
  if (result.value < incumbent_value) {
    result.strategy = incumbent;
    result.value = incumbent_value;
    result.improvement = 0.0;
  }
  return result;
}

// Insert the bit `x` of `player` into the others' (n-1)-bit outcome.
Outcome merge_outcome(Outcome others, int x, int player, int n) {
  const int low_bits = n - 1 - player;
  const Outcome low_mask = (Outcome{1} << low_bits) - 1;
  return ((others >> low_bits) << (low_bits + 1)) |
         (static_cast<Outcome>(x) << low_bits) | (others & low_mask);
}

}  // namespace

double NashReport::max_improvement() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& p : players) m = std::max(m, p.improvement);
  return m;
}

BestResponseResult best_response(const PayoffTable& table,
                                 const StrategyProfile& profile, int player,
                                 StrategyClass strategy_class,
                                 const OptimizerConfig& config,
                                 const ProtocolConfig& protocol) {
  if (config.restarts < 1) throw Error("optimizer needs at least one restart");
  const DeviationEvaluator eval(table, profile, player, protocol);
  const Strategy& incumbent = profile[static_cast<std::size_t>(player)];
  if (protocol.mode == Mode::kClassical) {
    return classical_best_response(eval, incumbent);
  }

  const double incumbent_value = eval.payoff(incumbent);
  const Parameterization param(strategy_class);
  const Objective objective = [&](std::span<const double> x) {
    const auto s = param.decode(x);
    if (!s) return -std::numeric_limits<double>::infinity();
    return eval.payoff(*s);
  };
  NelderMeadOptions options;
  options.max_iterations = config.max_iterations;
  options.tolerance = config.tolerance;
  options.initial_step = kInitialStep;

  std::vector<RestartOutcome> outcomes;
  for (int r = 0; r < config.restarts; ++r) {
    auto rng = seeded_engine(config.rng_seed, static_cast<std::uint64_t>(player),
                             static_cast<std::uint64_t>(r));
    std::vector<double> start;
    if (r == 0) {
      if (auto seed = param.encode(incumbent)) start = std::move(*seed);
    }
    while (start.empty() || !param.decode(start)) {
      start = gaussian_point(rng, param.dim());
    }
    const auto found = maximize_nelder_mead(objective, start, options);
    auto s = param.decode(found.x);
    if (!s) continue;
    outcomes.push_back({std::move(*s), found.value});
  }

  // First-found wins ties, so the order of restarts decides.
  BestResponseResult result{incumbent, incumbent_value, incumbent_value, 0.0,
                            outcomes};
  for (const auto& o : outcomes) {
    if (o.value > result.value) {
      result.strategy = o.strategy;
      result.value = o.value;
    }
  }
  result.improvement = result.value - incumbent_value;
  if (result.improvement < -kIncumbentFloor) {
    throw Error("best response fell below the incumbent payoff");
  }
  return result;
}

NashReport verify_nash(const PayoffTable& table, const StrategyProfile& profile,
                       StrategyClass strategy_class, double epsilon,
                       const OptimizerConfig& config,
                       const ProtocolConfig& protocol) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  const GameResult current = play(table, profile, protocol);
  NashReport report{{}, epsilon, true};
  for (int i = 0; i < table.n_players(); ++i) {
    const double payoff = current.expected_payoffs[static_cast<std::size_t>(i)];
    auto br = best_response(table, profile, i, strategy_class, config, protocol);
    const double improvement = br.value - payoff;
    const Strategy& incumbent = profile[static_cast<std::size_t>(i)];
    bool strict = improvement <= epsilon;
    for (const auto& o : br.restarts) {
      if (o.value >= payoff - epsilon &&
          strategy_distance(o.strategy, incumbent) > kStrictnessDistance) {
        strict = false;
      }
    }
    report.players.push_back(
        {payoff, br.value, improvement, std::move(br.strategy), strict});
    if (improvement > epsilon) report.is_nash = false;
  }
  return report;
}

Distribution deviation_marginal(const StrategyProfile& profile, int player,
                                const Strategy& deviation) {
  const int n = static_cast<int>(profile.size());
  if (n < 2) throw Error("marginal needs at least 2 players");
  if (player < 0 || player >= n) throw Error("player index out of range");
  StrategyProfile deviated = profile;
  deviated[static_cast<std::size_t>(player)] = deviation;

  bool coherent = true;
  for (const auto& s : deviated) coherent = coherent && s.is_coherent();
  if (coherent) {
    return marginal_distribution(final_state(deviated, /*before_final_gate=*/true),
                                 player);
  }
  DensityOperator rho =
      DensityOperator::from_pure(apply_entangler(StateVector::basis(n)));
  for (int i = 0; i < n; ++i) {
    rho = apply_local_channel(rho, deviated[static_cast<std::size_t>(i)].kraus(), i);
  }
  return marginal_distribution(rho, player);
}

double payoff_upper_bound(const PayoffTable& table,
                          const StrategyProfile& profile, int player) {
  if (!is_flip_symmetric(table)) {
    throw Error("payoff bound needs a flip-symmetric table");
  }
  if (static_cast<int>(profile.size()) != table.n_players()) {
    throw Error("profile length does not match the table");
  }
  for (const auto& s : profile) {
    if (!s.is_coherent()) throw Error("payoff bound needs a unitary profile");
  }
  const int n = table.n_players();
  const Distribution others =
      deviation_marginal(profile, player, Strategy::pure(0));
  double bound = 0.0;
  for (Outcome y = 0; y < others.probabilities.size(); ++y) {
    const double best =
        std::max(table.payoff(merge_outcome(y, 0, player, n), player),
                 table.payoff(merge_outcome(y, 1, player, n), player));
    bound += others.probabilities[y] * best;
  }
  return bound;
}

SampledEquilibriumReport sampled_no_unitary_equilibrium(
    const PayoffTable& table, int samples, const OptimizerConfig& config,
    double epsilon, const std::vector<StrategyProfile>& forced) {
  if (table.n_players() != 2) {
    throw Error("sampled equilibrium check is for two-player games");
  }
  if (samples < 0) throw Error("negative sample count");

  std::vector<std::pair<StrategyProfile, bool>> profiles;
  for (const auto& p : forced) profiles.emplace_back(p, true);
  auto rng = seeded_engine(config.rng_seed, 0x5a3d1e, 0);
  for (int k = 0; k < samples; ++k) {
    profiles.emplace_back(
        StrategyProfile{random_unitary_strategy(rng), random_unitary_strategy(rng)},
        false);
  }

  SampledEquilibriumReport report{{}, 0, 0.0};
  std::uint64_t index = 0;
  for (auto& [profile, is_forced] : profiles) {
    OptimizerConfig per_sample = config;
    per_sample.rng_seed = config.rng_seed + 1000003 * (index++);
    SampledProfileEntry entry{profile, is_forced, {}, false};
    for (int i = 0; i < 2; ++i) {
      const auto br =
          best_response(table, profile, i, StrategyClass::kUnitary, per_sample);
      entry.improvements.push_back(br.improvement);
      if (br.improvement > epsilon) entry.improvable = true;
    }
    if (entry.improvable) ++report.improvable_count;
    report.entries.push_back(std::move(entry));
  }
  if (!report.entries.empty()) {
    report.fraction_improvable = static_cast<double>(report.improvable_count) /
                                 static_cast<double>(report.entries.size());
  }
  return report;
}

}  // namespace qgames
