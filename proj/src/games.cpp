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

#include "qgames/games.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qgames {

namespace {

void check_player(const PayoffTable& table, int player) {
  if (player < 0 || player >= table.n_players()) {
    throw Error("player index " + std::to_string(player) + " out of range");
  }
}

}  // namespace

PayoffTable::PayoffTable(int n_players, std::vector<std::vector<double>> payoffs)
    : n_players_(n_players), payoffs_(std::move(payoffs)) {
  if (n_players < 1 || n_players > kMaxQubits) {
    throw Error("payoff table needs 1 <= players <= " +
                std::to_string(kMaxQubits));
  }
  if (payoffs_.size() != n_outcomes()) {
    throw Error("payoff table for " + std::to_string(n_players) +
                " players needs " + std::to_string(n_outcomes()) +
                " outcomes, got " + std::to_string(payoffs_.size()));
  }
  for (Outcome z = 0; z < payoffs_.size(); ++z) {
    if (payoffs_[z].size() != static_cast<std::size_t>(n_players)) {
      throw Error("outcome " + to_bitstring(z, n_players) + " has " +
                  std::to_string(payoffs_[z].size()) + " payoffs, expected " +
                  std::to_string(n_players));
    }
    for (double v : payoffs_[z]) {
      if (!std::isfinite(v)) {
        throw Error("outcome " + to_bitstring(z, n_players) +
                    " has a non-finite payoff");
      }
    }
  }
}

PayoffTable minority_table(int n) {
  if (n < 2) throw Error("minority game needs at least 2 players");
  if (n > kMaxQubits) throw Error("minority game too large");
  std::vector<std::vector<double>> payoffs(std::size_t{1} << n,
                                           std::vector<double>(n, 0.0));
  for (Outcome z = 0; z < payoffs.size(); ++z) {
    const int ones = std::popcount(z);
    for (int i = 0; i < n; ++i) {
      const int same = player_bit(z, i, n) ? ones : n - ones;
      if (2 * same < n) payoffs[z][static_cast<std::size_t>(i)] = 1.0;
    }
  }
  return PayoffTable(n, std::move(payoffs));
}

PayoffTable prisoners_dilemma_table(double r, double s, double t, double p) {
  if (!(t > r && r > p && p > s)) {
    throw Error("dilemma payoffs must satisfy t > r > p > s");
  }
  return PayoffTable(2, {{r, r}, {s, t}, {t, s}, {p, p}});
}

PayoffTable constant_table(int n, double value) {
  return PayoffTable(n, std::vector<std::vector<double>>(
                            std::size_t{1} << n, std::vector<double>(n, value)));
}

bool is_flip_symmetric(const PayoffTable& table) {
  const Outcome mask = table.n_outcomes() - 1;
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    if (table.payoffs(z) != table.payoffs(z ^ mask)) return false;
  }
  return true;
}

std::vector<double> classical_pure_payoffs(const PayoffTable& table,
                                           Outcome actions) {
  if (actions >= table.n_outcomes()) throw Error("action profile out of range");
  return table.payoffs(actions);
}

std::vector<double> classical_pure_payoffs(const PayoffTable& table,
                                           std::string_view actions) {
  if (static_cast<int>(actions.size()) != table.n_players()) {
    throw Error("action string '" + std::string(actions) + "' has length " +
                std::to_string(actions.size()) + ", expected " +
                std::to_string(table.n_players()));
  }
  return classical_pure_payoffs(table, from_bitstring(actions));
}

std::vector<double> classical_mixed_payoffs(
    const PayoffTable& table, const ClassicalMixedProfile& profile) {
  const int n = table.n_players();
  const auto& p = profile.flip_probabilities;
  if (static_cast<int>(p.size()) != n) {
    throw Error("mixed profile length does not match the table");
  }
  for (double q : p) {
    if (!(q >= 0.0 && q <= 1.0)) throw Error("flip probability outside [0,1]");
  }
  Distribution dist{n, std::vector<double>(table.n_outcomes())};
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    double weight = 1.0;
    for (int i = 0; i < n; ++i) {
      const double q = p[static_cast<std::size_t>(i)];
      weight *= player_bit(z, i, n) ? q : 1.0 - q;
    }
    dist.probabilities[z] = weight;
  }
  return expected_payoffs(table, dist);
}

std::vector<double> expected_payoffs(const PayoffTable& table,
                                     const Distribution& dist) {
  if (dist.n_bits != table.n_players()) {
    throw Error("distribution and table disagree on the player count");
  }
  std::vector<double> out(static_cast<std::size_t>(table.n_players()), 0.0);
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    const double pz = dist.probabilities[z];
    if (pz == 0.0) continue;
    const auto& row = table.payoffs(z);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += pz * row[i];
  }
  return out;
}

std::optional<int> dominant_action(const PayoffTable& table, int player) {
  check_player(table, player);
  const int n = table.n_players();
  const Outcome bit = Outcome{1} << (n - 1 - player);
  bool one_dominates = true;
  bool zero_dominates = true;
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    if (z & bit) continue;  // enumerate opponents with the player's bit at 0
    const double pay0 = table.payoff(z, player);
    const double pay1 = table.payoff(z | bit, player);
    if (!(pay1 > pay0)) one_dominates = false;
    if (!(pay0 > pay1)) zero_dominates = false;
  }
  if (one_dominates) return 1;
  if (zero_dominates) return 0;
  return std::nullopt;
}

std::vector<std::string> classical_nash_search(const PayoffTable& table) {
  const int n = table.n_players();
  std::vector<std::string> out;
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const Outcome deviated = z ^ (Outcome{1} << (n - 1 - i));
      if (table.payoff(deviated, i) > table.payoff(z, i)) stable = false;
    }
    if (stable) out.push_back(to_bitstring(z, n));
  }
  return out;
}

}  // namespace qgames
