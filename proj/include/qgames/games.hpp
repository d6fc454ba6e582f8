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

#ifndef QGAMES_GAMES_HPP_
#define QGAMES_GAMES_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgames/qcore.hpp"

namespace qgames {

// Dense payoff table of a two-action game: for every n-bit outcome, one real
// payoff per player.
class PayoffTable {
 public:
  // `payoffs[outcome][player]`; needs exactly 2^n rows of n finite values.
  PayoffTable(int n_players, std::vector<std::vector<double>> payoffs);

  int n_players() const { return n_players_; }
  Outcome n_outcomes() const { return Outcome{1} << n_players_; }

  double payoff(Outcome outcome, int player) const {
    return payoffs_[outcome][static_cast<std::size_t>(player)];
  }
  const std::vector<double>& payoffs(Outcome outcome) const {
    return payoffs_[outcome];
  }

  bool operator==(const PayoffTable&) const = default;

 private:
  int n_players_;
  std::vector<std::vector<double>> payoffs_;
};

// Independent flip probabilities, one per player.
struct ClassicalMixedProfile {
  std::vector<double> flip_probabilities;
};

// Players holding the strictly less common bit value earn 1.
PayoffTable minority_table(int n);

// Two-player dilemma with bit 1 = defect: 00->(r,r), 01->(s,t), 10->(t,s),
// 11->(p,p). Requires t > r > p > s.
PayoffTable prisoners_dilemma_table(double r = 3.0, double s = 0.0,
                                    double t = 5.0, double p = 1.0);

PayoffTable constant_table(int n, double value);

// True iff every outcome pays the same as its bitwise complement.
bool is_flip_symmetric(const PayoffTable& table);

std::vector<double> classical_pure_payoffs(const PayoffTable& table,
                                           std::string_view actions);
std::vector<double> classical_pure_payoffs(const PayoffTable& table,
                                           Outcome actions);

std::vector<double> classical_mixed_payoffs(const PayoffTable& table,
                                            const ClassicalMixedProfile& profile);

// Expected payoffs under an arbitrary outcome distribution.
std::vector<double> expected_payoffs(const PayoffTable& table,
                                     const Distribution& dist);

// The strictly dominant action (0 or 1) of `player`, if one exists.
std::optional<int> dominant_action(const PayoffTable& table, int player);

// Pure profiles (as bitstrings, ascending) where no single-player flip
// strictly improves the deviator. Ties count as equilibria.
std::vector<std::string> classical_nash_search(const PayoffTable& table);

// Line-oriented text format:
//   # comment
//   players: N
//   <bitstring> <p1> ... <pN>      (2^N rows, any order)
PayoffTable load_table(std::string_view text);
std::string save_table(const PayoffTable& table);

PayoffTable read_table_file(const std::filesystem::path& path);
void write_table_file(const PayoffTable& table,
                      const std::filesystem::path& path);

}  // namespace qgames

#endif  // QGAMES_GAMES_HPP_
