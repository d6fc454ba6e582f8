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

#include "app/experiments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "qgames/equilibria.hpp"
#include "qgames/protocol.hpp"
#include "qgames/text.hpp"

namespace qgames::app {

namespace {

OptimizerConfig optimizer(const ExperimentOptions& o) {
  OptimizerConfig c;
  c.restarts = o.restarts;
  c.max_iterations = o.max_iterations;
  c.rng_seed = o.seed;
  return c;
}

StrategyProfile repeat(std::string_view name, int n) {
  return StrategyProfile(static_cast<std::size_t>(n), named_strategy(name));
}

std::string player_key(int i, std::string_view what) {
  return "player" + std::to_string(i + 1) + "." + std::string(what);
}

// Largest |got - want| over matching entries.
double max_gap(const std::vector<double>& got, const std::vector<double>& want) {
  double gap = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    gap = std::max(gap, std::abs(got[i] - want[i]));
  }
  return gap;
}

void record_payoffs(Report& r, const std::string& section,
                    const std::vector<double>& payoffs) {
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    r.value(section, player_key(static_cast<int>(i), "payoff"), payoffs[i]);
  }
}

// Inverse of the two-angle map, choosing a_B >= 0 and the sign of the
// quaternion that makes it so.
TwoAngleParams two_angle_of(const Strategy& s) {
  const Quaternion q = quaternion_from_unitary(*s.as_unitary());
  TwoAngleParams p;
  const double a_a = std::hypot(q.n1, q.n2);
  const double a_b = std::hypot(q.n0, q.n3);
  p.alpha_a = a_a / std::hypot(a_a, a_b);
  if (a_a > 0) {
    p.beta_a = q.n1 / a_a;
    p.beta_b = q.n2 / a_a;
  }
  if (a_b > 0) {
    p.gamma_a = q.n0 / a_b;
    p.gamma_b = q.n3 / a_b;
  }
  return p;
}

void minority3_reduction(const ExperimentOptions& o, Report& r) {
  const auto table = minority_table(3);
  std::mt19937_64 rng(o.seed);
  constexpr int kProfiles = 1000;
  double closed_gap = 0.0, classical_gap = 0.0;
  for (int k = 0; k < kProfiles; ++k) {
    StrategyProfile profile;
    std::array<TwoAngleParams, 3> params;
    std::vector<double> flips;
    for (int i = 0; i < 3; ++i) {
      profile.push_back(random_unitary_strategy(rng));
      params[static_cast<std::size_t>(i)] = two_angle_of(profile.back());
      flips.push_back(effective_flip_probability(profile.back()));
    }
    const auto sim = play(table, profile).expected_payoffs;
    const auto closed = prob_minority3_closed_form(params);
    classical_gap = std::max(classical_gap,
                             max_gap(sim, classical_mixed_payoffs(table, {flips})));
    closed_gap = std::max(closed_gap,
                          max_gap(sim, {closed.begin(), closed.end()}));
  }
  const std::string s = "minority3-reduction";
  r.value(s, "profiles", kProfiles);
  r.value(s, "max_gap_closed_form", closed_gap);
  r.value(s, "max_gap_classical_mixed", classical_gap);
  r.check(s + "/closed-form", closed_gap <= 1e-9,
          "simulator matches the closed-form minority probability");
  r.check(s + "/classical-mixed", classical_gap <= 1e-9,
          "simulator matches the classical game at the effective flip rates");
}

void minority4_equilibrium(const ExperimentOptions& o, Report& r) {
  const auto table = minority_table(4);
  const auto profile = repeat("A", 4);
  const std::string s = "minority4-equilibrium";

  const auto payoffs = play(table, profile).expected_payoffs;
  record_payoffs(r, s, payoffs);
  r.check(s + "/payoff-quarter", max_gap(payoffs, {0.25, 0.25, 0.25, 0.25}) <= 1e-9,
          "each player earns 1/4");

  // Weight-1 strings at +1/sqrt8, weight-3 strings at -1/sqrt8.
  ComplexVector want = ComplexVector::Zero(16);
  for (Outcome z = 0; z < 16; ++z) {
    const int w = std::popcount(z);
    if (w == 1) want[static_cast<Eigen::Index>(z)] = 1.0 / std::sqrt(8.0);
    if (w == 3) want[static_cast<Eigen::Index>(z)] = -1.0 / std::sqrt(8.0);
  }
  const ComplexVector got = final_state(profile).amplitudes();
  const Complex overlap = want.dot(got);
  const Complex phase = overlap / std::abs(overlap);
  const double state_gap = (got - phase * want).cwiseAbs().maxCoeff();
  r.value(s, "final_state_max_gap", state_gap);
  r.check(s + "/eight-term-state", state_gap <= 1e-9,
          "final state is the eight-term superposition up to global phase");

  const auto report =
      verify_nash(table, profile, StrategyClass::kChannel, o.epsilon, optimizer(o));
  for (int i = 0; i < 4; ++i) {
    r.value(s, player_key(i, "channel_improvement"),
            report.players[static_cast<std::size_t>(i)].improvement);
  }
  r.check(s + "/nash-verdict", report.is_nash && report.max_improvement() <= 1e-6,
          "no channel deviation gains more than 1e-6");

  double bound_gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double b = payoff_upper_bound(table, profile, i);
    r.value(s, player_key(i, "upper_bound"), b);
    bound_gap = std::max(bound_gap, std::abs(b - 0.25));
  }
  r.check(s + "/bound-quarter", bound_gap <= 1e-12,
          "no deviation of any kind can exceed 1/4");
}

void minority4_bound(const ExperimentOptions& o, Report& r) {
  const auto table = minority_table(4);
  const auto profile = repeat("A", 4);
  const std::string s = "minority4-bound";
  double bound_gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double b = payoff_upper_bound(table, profile, i);
    r.value(s, player_key(i, "upper_bound"), b);
    bound_gap = std::max(bound_gap, std::abs(b - 0.25));
  }
  r.check(s + "/bound-quarter", bound_gap <= 1e-12, "bound equals 1/4 for every player");

  std::mt19937_64 rng(o.seed);
  constexpr int kChannels = 200;
  double marginal_gap = 0.0;
  for (int k = 0; k < kChannels; ++k) {
    const auto m = deviation_marginal(profile, k % 4, random_channel_strategy(rng));
    for (double p : m.probabilities) marginal_gap = std::max(marginal_gap, std::abs(p - 0.125));
  }
  r.value(s, "random_channels", kChannels);
  r.value(s, "marginal_max_gap", marginal_gap);
  r.check(s + "/marginal-uniform", marginal_gap <= 1e-9,
          "the others' outcomes stay uniform whatever one player does");
}

void minority4_decoherence(const ExperimentOptions&, Report& r) {
  const auto table = minority_table(4);
  const auto profile = repeat("A", 4);
  const std::string s = "minority4-decoherence";
  const auto coherent = play(table, profile).expected_payoffs;
  const auto decoherent = play_decoherent(table, profile).expected_payoffs;
  const auto classical = classical_mixed_payoffs(table, {{0.5, 0.5, 0.5, 0.5}});
  record_payoffs(r, s + ".entangled", coherent);
  record_payoffs(r, s + ".decoherent", decoherent);
  record_payoffs(r, s + ".classical", classical);
  r.check(s + "/entangled-quarter", max_gap(coherent, {0.25, 0.25, 0.25, 0.25}) <= 1e-9,
          "entangled play pays 1/4");
  r.check(s + "/decoherent-eighth",
          max_gap(decoherent, {0.125, 0.125, 0.125, 0.125}) <= 1e-9,
          "shared classical randomness pays only 1/8");
  r.check(s + "/matches-classical", max_gap(decoherent, classical) <= 1e-9,
          "decoherent play equals the classical game at p = 1/2");
}

void classical_baselines(const ExperimentOptions& o, Report& r) {
  const std::string s = "classical-baselines";
  const auto m4 = classical_mixed_payoffs(minority_table(4), {{0.5, 0.5, 0.5, 0.5}});
  record_payoffs(r, s + ".minority4", m4);
  r.check(s + "/minority4-eighth",
          std::all_of(m4.begin(), m4.end(), [](double v) { return v == 0.125; }),
          "random play in the 4-player minority game pays exactly 1/8");

  const auto m3 = classical_mixed_payoffs(minority_table(3), {{0.5, 0.5, 0.5}});
  record_payoffs(r, s + ".minority3", m3);
  r.check(s + "/minority3-quarter",
          std::all_of(m3.begin(), m3.end(), [](double v) { return v == 0.25; }),
          "random play in the 3-player minority game pays exactly 1/4");

  // Quantum play restricted to {I, F} is the classical game.
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-5, 5);
  constexpr int kTables = 20;
  double gap = 0.0;
  for (int k = 0; k < kTables; ++k) {
    const int n = 2 + k % 3;
    std::vector<std::vector<double>> rows(std::size_t{1} << n);
    for (auto& row : rows) {
      for (int i = 0; i < n; ++i) row.push_back(u(rng));
    }
    const PayoffTable table(n, rows);
    for (Outcome z = 0; z < table.n_outcomes(); ++z) {
      StrategyProfile p;
      for (int i = 0; i < n; ++i) p.push_back(named_strategy(player_bit(z, i, n) ? "F" : "I"));
      gap = std::max(gap, max_gap(play(table, p).expected_payoffs,
                                  classical_pure_payoffs(table, z)));
    }
  }
  r.value(s, "embedding_tables", kTables);
  r.value(s, "embedding_max_gap", gap);
  r.check(s + "/classical-embedding", gap <= 1e-12,
          "every {I,F} profile reproduces the classical payoffs");

  const auto nash = classical_nash_search(prisoners_dilemma_table());
  r.text(s, "dilemma_pure_equilibria", nash.empty() ? "-" : nash.front());
  r.check(s + "/dilemma-defect", nash == std::vector<std::string>{"11"},
          "mutual defection is the only classical pure equilibrium");
}

void pd_dominance(const ExperimentOptions& o, Report& r) {
  const auto table = prisoners_dilemma_table();
  const std::string s = "pd-dominance";
  bool dominant = true;
  for (int i = 0; i < 2; ++i) {
    const auto d = dominant_action(table, i);
    r.text(s, player_key(i, "dominant_action"), d ? std::to_string(*d) : "none");
    dominant = dominant && d == 1;
  }
  r.check(s + "/classical-defect-dominant", dominant,
          "defection dominates classically for both players");

  const auto ff = play(table, repeat("F", 2)).expected_payoffs;
  record_payoffs(r, s + ".quantized_FF", ff);
  r.check(s + "/quantized-defect-payoff", max_gap(ff, {1.0, 1.0}) <= 1e-9,
          "quantized mutual defection still pays the punishment payoff");

  const auto report = verify_nash(table, repeat("F", 2), StrategyClass::kUnitary,
                                  o.epsilon, optimizer(o));
  for (int i = 0; i < 2; ++i) {
    r.value(s, player_key(i, "unitary_improvement"),
            report.players[static_cast<std::size_t>(i)].improvement);
  }
  r.check(s + "/quantized-defect-not-nash",
          !report.is_nash && report.max_improvement() > o.epsilon,
          "a unitary deviation from (F,F) pays more");
}

void two_player_no_pure(const ExperimentOptions& o, Report& r) {
  const std::string s = "two-player-no-pure";
  constexpr int kSamples = 100;
  const auto report = sampled_no_unitary_equilibrium(
      prisoners_dilemma_table(), kSamples, optimizer(o), o.epsilon,
      {repeat("F", 2)});
  r.value(s, "profiles", static_cast<double>(report.entries.size()));
  r.value(s, "improvable", report.improvable_count);
  r.value(s, "fraction_improvable", report.fraction_improvable);
  r.check(s + "/every-profile-improvable", report.fraction_improvable == 1.0,
          "every sampled unitary profile admits a profitable unitary deviation");
}

PayoffTable required_table(std::string_view name, const ExperimentOptions& o,
                           int players) {
  if (!o.table) {
    throw MissingTableError(std::string(name) + " requires --table <file>: " +
                            std::to_string(players) +
                            "-player payoff table in the qgames table format");
  }
  auto table = read_table_file(*o.table);
  if (table.n_players() != players) {
    throw Error(std::string(name) + " needs a " + std::to_string(players) +
                "-player table, got " + std::to_string(table.n_players()));
  }
  return table;
}

void dilemma3(const ExperimentOptions& o, Report& r) {
  const auto table = required_table("dilemma3", o, 3);
  const std::string s = "dilemma3";
  bool dominant = true;
  for (int i = 0; i < 3; ++i) {
    const auto d = dominant_action(table, i);
    r.text(s, player_key(i, "dominant_action"), d ? std::to_string(*d) : "none");
    dominant = dominant && d == 1;
  }
  r.check(s + "/dominant-one", dominant, "choosing 1 dominates for every player");
  const auto& at_dominant = table.payoffs(0b111);
  record_payoffs(r, s + ".dominant_outcome", at_dominant);
  r.check(s + "/dominant-pays-two", max_gap(at_dominant, {2, 2, 2}) <= 1e-9,
          "the dominant outcome pays 2 to each player");

  const StrategyProfile ihf{named_strategy("I"), named_strategy("H"),
                            named_strategy("F")};
  const auto payoffs = play(table, ihf).expected_payoffs;
  record_payoffs(r, s + ".IHF", payoffs);
  r.check(s + "/IHF-payoffs", max_gap(payoffs, {5, 9, 5}) <= 1e-9,
          "(I,H,F) pays (5,9,5)");
  const auto report =
      verify_nash(table, ihf, StrategyClass::kChannel, o.epsilon, optimizer(o));
  for (int i = 0; i < 3; ++i) {
    const auto& p = report.players[static_cast<std::size_t>(i)];
    r.value(s, player_key(i, "channel_improvement"), p.improvement);
    r.text(s, player_key(i, "strict"), p.strict ? "yes" : "no");
  }
  r.check(s + "/IHF-nash", report.is_nash, "(I,H,F) is a channel-level equilibrium");
  r.check(s + "/strict-A-and-C", report.players[0].strict && report.players[2].strict,
          "players A and C have unique best replies");
}

void fig2c(const ExperimentOptions& o, Report& r) {
  const auto table = required_table("fig2c", o, 3);
  const std::string s = "fig2c";
  const auto fff = repeat("F", 3);
  const auto base = play(table, fff).expected_payoffs;
  record_payoffs(r, s + ".FFF", base);
  const auto report =
      verify_nash(table, fff, StrategyClass::kUnitary, o.epsilon, optimizer(o));
  r.value(s, "max_unitary_improvement", report.max_improvement());
  r.check(s + "/FFF-not-nash", !report.is_nash, "(F,F,F) is not a quantum equilibrium");
  bool all_gain = true;
  for (int i = 0; i < 3; ++i) {
    auto p = fff;
    p[static_cast<std::size_t>(i)] = named_strategy("IY");
    const double v = play(table, p).expected_payoffs[static_cast<std::size_t>(i)];
    r.value(s, player_key(i, "payoff_switching_to_IY"), v);
    all_gain = all_gain && v > base[static_cast<std::size_t>(i)] + o.epsilon;
  }
  r.check(s + "/IY-improves", all_gain, "switching to i sigma_y pays the deviator more");
}

using Runner = void (*)(const ExperimentOptions&, Report&);

struct Entry {
  std::string name;
  Runner run;
  bool needs_table;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries{
      {"minority3-reduction", minority3_reduction, false},
      {"minority4-equilibrium", minority4_equilibrium, false},
      {"minority4-bound", minority4_bound, false},
      {"minority4-decoherence", minority4_decoherence, false},
      {"classical-baselines", classical_baselines, false},
      {"pd-dominance", pd_dominance, false},
      {"two-player-no-pure", two_player_no_pure, false},
      {"dilemma3", dilemma3, true},
      {"fig2c", fig2c, true},
  };
  return entries;
}

const Entry& find(std::string_view name) {
  for (const Entry& e : catalog()) {
    if (e.name == name) return e;
  }
  std::string valid;
  for (const auto& n : experiment_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw Error("unknown experiment '" + std::string(name) + "'; valid: " + valid);
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : catalog()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool experiment_needs_table(std::string_view name) { return find(name).needs_table; }

void run_experiment(std::string_view name, const ExperimentOptions& options,
                    Report& report) {
  find(name).run(options, report);
}

}  // namespace qgames::app
