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

#include "qgames/protocol.hpp"

#include <cmath>
#include <string>

namespace qgames {

namespace {

void check_arity(const PayoffTable& table, const StrategyProfile& profile) {
  if (static_cast<int>(profile.size()) != table.n_players()) {
    throw Error("profile has " + std::to_string(profile.size()) +
                " strategies but the game has " +
                std::to_string(table.n_players()) + " players");
  }
}

void check_quantum_size(int n) {
  if (n < 2) throw Error("quantum play needs at least 2 players");
}

bool all_coherent(const StrategyProfile& profile) {
  for (const Strategy& s : profile) {
    if (!s.is_coherent()) return false;
  }
  return true;
}

// Applies every strategy to a register, staying pure when possible.
struct Register {
  std::optional<StateVector> pure;
  std::optional<DensityOperator> mixed;

  void apply(const Strategy& s, int player) {
    if (pure) {
      if (auto u = s.as_unitary()) {
        pure = apply_local_unitary(*pure, *u, player);
        return;
      }
      mixed = DensityOperator::from_pure(*pure);
      pure.reset();
    }
    mixed = apply_local_channel(*mixed, s.kraus(), player);
  }

  Distribution distribution() const {
    return pure ? outcome_distribution(*pure) : outcome_distribution(*mixed);
  }
};

GameResult make_result(const PayoffTable& table, Distribution dist) {
  auto payoffs = expected_payoffs(table, dist);
  return {std::move(dist), std::move(payoffs)};
}

std::vector<double> flip_probabilities(const StrategyProfile& profile) {
  std::vector<double> p;
  p.reserve(profile.size());
  for (const Strategy& s : profile) p.push_back(effective_flip_probability(s));
  return p;
}

Distribution product_distribution(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  Distribution d{n, std::vector<double>(std::size_t{1} << n)};
  for (Outcome z = 0; z < d.probabilities.size(); ++z) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      const double q = p[static_cast<std::size_t>(i)];
      w *= player_bit(z, i, n) ? q : 1.0 - q;
    }
    d.probabilities[z] = w;
  }
  return d;
}

}  // namespace

GameResult play(const PayoffTable& table, const StrategyProfile& profile,
                const ProtocolConfig& config) {
  check_arity(table, profile);
  const int n = table.n_players();
  switch (config.mode) {
    case Mode::kClassical:
      return make_result(table, product_distribution(flip_probabilities(profile)));
    case Mode::kDecoherent:
      return play_decoherent(table, profile, config.apply_final_gate);
    case Mode::kEntangled:
      break;
  }
  check_quantum_size(n);
  if (all_coherent(profile)) {
    return make_result(
        table, outcome_distribution(final_state(profile, !config.apply_final_gate)));
  }
  DensityOperator rho = apply_entangler(
      DensityOperator::from_pure(StateVector::basis(n)));
  for (int i = 0; i < n; ++i) {
    rho = apply_local_channel(rho, profile[static_cast<std::size_t>(i)].kraus(), i);
  }
  if (config.apply_final_gate) rho = apply_entangler(rho, /*adjoint=*/true);
  return make_result(table, outcome_distribution(rho));
}

StateVector final_state(const StrategyProfile& profile,
                        bool before_final_gate) {
  const int n = static_cast<int>(profile.size());
  check_quantum_size(n);
  StateVector state = apply_entangler(StateVector::basis(n));
  for (int i = 0; i < n; ++i) {
    const auto u = profile[static_cast<std::size_t>(i)].as_unitary();
    if (!u) {
      throw Error("final_state needs unitary strategies; player " +
                  std::to_string(i) + " is not");
    }
    state = apply_local_unitary(state, *u, i);
  }
  return before_final_gate ? state : apply_entangler(state, /*adjoint=*/true);
}

GameResult play_decoherent(const PayoffTable& table,
                           const StrategyProfile& profile,
                           bool apply_final_layer) {
  check_arity(table, profile);
  const int n = table.n_players();
  check_quantum_size(n);
  Distribution avg{n, std::vector<double>(table.n_outcomes(), 0.0)};
  for (Outcome start : {Outcome{0}, table.n_outcomes() - 1}) {
    Register reg;
    reg.pure = StateVector::basis(n, start);
    for (int i = 0; i < n; ++i) reg.apply(profile[static_cast<std::size_t>(i)], i);
    // The second CONTROL-NOT layer only fires on the r = 1 branch.
    if (apply_final_layer && start != 0) {
      if (reg.pure) {
        reg.pure = apply_global_flip(*reg.pure);
      } else {
        reg.mixed = apply_global_flip(*reg.mixed);
      }
    }
    const Distribution d = reg.distribution();
    for (Outcome z = 0; z < avg.probabilities.size(); ++z) {
      avg.probabilities[z] += 0.5 * d.probabilities[z];
    }
  }
  return make_result(table, std::move(avg));
}

std::array<double, 3> prob_minority3_closed_form(
    std::span<const TwoAngleParams> params) {
  if (params.size() != 3) throw Error("closed form needs exactly 3 players");
  for (const TwoAngleParams& p : params) from_two_angle(p);  // validates
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const TwoAngleParams& me = params[static_cast<std::size_t>(i)];
    const TwoAngleParams& next = params[static_cast<std::size_t>((i + 1) % 3)];
    const TwoAngleParams& last = params[static_cast<std::size_t>((i + 2) % 3)];
    const double stay = me.alpha_b() * next.alpha_a * last.alpha_a;
    const double flip = me.alpha_a * next.alpha_b() * last.alpha_b();
    out[static_cast<std::size_t>(i)] = stay * stay + flip * flip;
  }
  return out;
}

DeviationEvaluator::DeviationEvaluator(const PayoffTable& table,
                                       const StrategyProfile& profile,
                                       int player, const ProtocolConfig& config)
    : table_(table), player_(player), n_(table.n_players()), mode_(config.mode) {
  check_arity(table, profile);
  if (player < 0 || player >= n_) {
    throw Error("player index " + std::to_string(player) + " out of range");
  }
  if (mode_ == Mode::kClassical) {
    classical_flips_ = flip_probabilities(profile);
    return;
  }
  check_quantum_size(n_);

  struct Start {
    double weight;
    StateVector state;
    Post post;
  };
  std::vector<Start> starts;
  if (mode_ == Mode::kEntangled) {
    starts.push_back({1.0, apply_entangler(StateVector::basis(n_)),
                      config.apply_final_gate ? Post::kEntanglerAdjoint : Post::kNone});
  } else {
    starts.push_back({0.5, StateVector::basis(n_, 0), Post::kNone});
    starts.push_back({0.5, StateVector::basis(n_, table.n_outcomes() - 1),
                      config.apply_final_gate ? Post::kGlobalFlip : Post::kNone});
  }
  for (auto& [weight, state, post] : starts) {
    Register reg;
    reg.pure = state;
    for (int i = 0; i < n_; ++i) {
      if (i != player) reg.apply(profile[static_cast<std::size_t>(i)], i);
    }
    Branch b{weight, post, std::nullopt, std::nullopt};
    if (reg.pure) {
      b.pure = reg.pure->amplitudes();
    } else {
      b.mixed = std::move(reg.mixed);
    }
    branches_.push_back(std::move(b));
  }
}

double DeviationEvaluator::payoff(const Strategy& strategy) const {
  return payoff(strategy.kraus());
}

double DeviationEvaluator::payoff(const Mat2& unitary) const {
  return payoff(std::span<const Mat2>(&unitary, 1));
}

double DeviationEvaluator::payoff(std::span<const Mat2> kraus) const {
  const Distribution d = distribution(kraus);
  double value = 0.0;
  for (Outcome z = 0; z < d.probabilities.size(); ++z) {
    value += d.probabilities[z] * table_.payoff(z, player_);
  }
  return value;
}

Distribution DeviationEvaluator::distribution(
    std::span<const Mat2> kraus) const {
  if (mode_ == Mode::kClassical) {
    std::vector<double> p = classical_flips_;
    double flip = 0.0;
    for (const Mat2& a : kraus) flip += std::norm(a(1, 0));
    p[static_cast<std::size_t>(player_)] = flip;
    return product_distribution(p);
  }
  Distribution d{n_, std::vector<double>(table_.n_outcomes(), 0.0)};
  std::vector<double> branch_probs(table_.n_outcomes());
  for (const Branch& b : branches_) {
    std::fill(branch_probs.begin(), branch_probs.end(), 0.0);
    if (b.pure) {
      // Each Kraus element is a measurement branch; J^dagger and X are
      // unitary, so branch probabilities simply add.
      const Eigen::Index mask = b.pure->size() - 1;
      for (const Mat2& a : kraus) {
        ComplexVector v = apply_local_operator(*b.pure, a, player_, n_);
        if (b.post == Post::kEntanglerAdjoint) {
          ComplexVector w(v.size());
          constexpr double kInvSqrt2 = 0.70710678118654752440;
          for (Eigen::Index z = 0; z < v.size(); ++z) {
            w[z] = (v[z] - Complex(0.0, 1.0) * v[z ^ mask]) * kInvSqrt2;
          }
          v.swap(w);
        } else if (b.post == Post::kGlobalFlip) {
          v = v.reverse().eval();
        }
        accumulate_probabilities(v, branch_probs);
      }
    } else {
      DensityOperator rho = apply_local_channel(*b.mixed, kraus, player_);
      if (b.post == Post::kEntanglerAdjoint) {
        rho = apply_entangler(rho, /*adjoint=*/true);
      } else if (b.post == Post::kGlobalFlip) {
        rho = apply_global_flip(rho);
      }
      branch_probs = outcome_distribution(rho).probabilities;
    }
    for (Outcome z = 0; z < branch_probs.size(); ++z) {
      d.probabilities[z] += b.weight * branch_probs[z];
    }
  }
  return d;
}

}  // namespace qgames
