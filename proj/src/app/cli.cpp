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

#include "app/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "app/experiments.hpp"
#include "app/report.hpp"
#include "qgames/equilibria.hpp"
#include "qgames/protocol.hpp"
#include "qgames/text.hpp"

namespace qgames::app {

namespace {

struct Flags {
  std::string game;
  std::string profile;
  std::string mode = "entangled";
  bool no_final_gate = false;
  std::string strategy_class = "channel";
  double epsilon = kDefaultEpsilon;
  int restarts = 32;
  int max_iterations = 2000;
  std::uint64_t seed = 0;
  int player = 1;
  std::string experiment;
  std::string table;
  std::string out;
  std::string format = "text";
};

double number(std::string_view token) {
  const auto v = parse_number(trim(token));
  if (!v) throw ParseError("expected a number", std::string(token));
  return *v;
}

PayoffTable parse_game(const std::string& spec) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (!spec.starts_with(kBuiltin)) return read_table_file(spec);
  const std::string rest = spec.substr(kBuiltin.size());
  if (rest.starts_with("minority:")) {
    const std::string n = rest.substr(9);
    const double v = number(n);
    if (v != std::floor(v) || v < 1 || v > 20) throw ParseError("bad player count", n);
    return minority_table(static_cast<int>(v));
  }
  if (rest == "pd") return prisoners_dilemma_table();
  if (rest.starts_with("pd:")) {
    // T,R,P,S order on the command line.
    const std::string values = rest.substr(3);
    const auto parts = split_top_level(values, ',');
    if (parts.size() != 4) throw ParseError("pd needs T,R,P,S", values);
    const double t = number(parts[0]), r = number(parts[1]);
    const double p = number(parts[2]), s = number(parts[3]);
    return prisoners_dilemma_table(r, s, t, p);
  }
  throw ParseError("unknown builtin game", spec);
}

ProtocolConfig protocol(const Flags& f) {
  static const std::map<std::string, Mode> modes{{"entangled", Mode::kEntangled},
                                                 {"decoherent", Mode::kDecoherent},
                                                 {"classical", Mode::kClassical}};
  return {modes.at(f.mode), !f.no_final_gate};
}

StrategyClass strategy_class(const Flags& f) {
  return f.strategy_class == "unitary" ? StrategyClass::kUnitary
                                       : StrategyClass::kChannel;
}

OptimizerConfig optimizer(const Flags& f) {
  OptimizerConfig c;
  c.restarts = f.restarts;
  c.max_iterations = f.max_iterations;
  c.rng_seed = f.seed;
  return c;
}

StrategyProfile load_profile(const Flags& f, const PayoffTable& table) {
  auto profile = parse_profile(f.profile);
  if (static_cast<int>(profile.size()) != table.n_players()) {
    throw Error("profile has " + std::to_string(profile.size()) +
                " strategies but the game has " +
                std::to_string(table.n_players()) + " players");
  }
  return profile;
}

std::string player_key(int i) { return "player" + std::to_string(i + 1); }

void emit(const Report& report, const Flags& f, std::ostream& out) {
  if (f.format == "csv") {
    report.write_csv(out);
  } else {
    report.write_text(out);
  }
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) throw Error("cannot write " + f.out);
    report.write_csv(file);
  }
}

int cmd_run(const Flags& f, std::ostream& out) {
  const auto table = parse_game(f.game);
  const auto profile = load_profile(f, table);
  const auto result = play(table, profile, protocol(f));
  Report r;
  const int n = table.n_players();
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    const double p = result.distribution.probabilities[z];
    if (p > 1e-15) r.value("distribution", to_bitstring(z, n), p);
  }
  for (int i = 0; i < n; ++i) {
    r.value("payoffs", player_key(i), result.expected_payoffs[static_cast<std::size_t>(i)]);
  }
  emit(r, f, out);
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto table = parse_game(f.game);
  const auto profile = load_profile(f, table);
  const auto report = verify_nash(table, profile, strategy_class(f), f.epsilon,
                                  optimizer(f), protocol(f));
  Report r;
  r.value("nash", "epsilon", report.epsilon);
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    const auto& p = report.players[i];
    const std::string s = player_key(static_cast<int>(i));
    r.value(s, "current_payoff", p.current_payoff);
    r.value(s, "best_response_value", p.best_response_value);
    r.value(s, "improvement", p.improvement);
    r.text(s, "strict", p.strict ? "yes" : "no");
    r.text(s, "best_response", p.best_response.describe());
  }
  r.value("nash", "max_improvement", report.max_improvement());
  r.text("nash", "verdict", report.is_nash ? "equilibrium" : "not an equilibrium");
  emit(r, f, out);
  return report.is_nash ? kExitOk : kExitVerifiedFalse;
}

int cmd_best_response(const Flags& f, std::ostream& out) {
  const auto table = parse_game(f.game);
  const auto profile = load_profile(f, table);
  if (f.player < 1 || f.player > table.n_players()) {
    throw Error("--player must be between 1 and " + std::to_string(table.n_players()));
  }
  const auto br = best_response(table, profile, f.player - 1, strategy_class(f),
                                optimizer(f), protocol(f));
  Report r;
  const std::string s = player_key(f.player - 1);
  r.value(s, "incumbent_value", br.incumbent_value);
  r.value(s, "best_response_value", br.value);
  r.value(s, "improvement", br.improvement);
  r.text(s, "best_response", br.strategy.describe());
  emit(r, f, out);
  return kExitOk;
}

int cmd_reproduce(const Flags& f, std::ostream& out) {
  ExperimentOptions o;
  o.seed = f.seed;
  o.restarts = f.restarts;
  o.max_iterations = f.max_iterations;
  o.epsilon = f.epsilon;
  if (!f.table.empty()) o.table = f.table;
  Report r;
  try {
    run_experiment(f.experiment, o, r);
  } catch (const MissingTableError& e) {
    out << "SKIPPED " << f.experiment << ": " << e.what() << "\n";
    return kExitUsage;
  }
  emit(r, f, out);
  return r.passed() ? kExitOk : kExitVerifiedFalse;
}

void add_game_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--game", f.game,
                  "builtin:minority:N, builtin:pd[:T,R,P,S] or a table file")
      ->required();
  cmd->add_option("--profile", f.profile,
                  "comma-separated strategies: I F H A IY U(..) M(p) K(file)")
      ->required();
  cmd->add_option("--mode", f.mode, "entangled, decoherent or classical")
      ->check(CLI::IsMember({"entangled", "decoherent", "classical"}));
  cmd->add_flag("--no-final-gate", f.no_final_gate, "skip the closing disentangler");
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--out", f.out, "also write the report as CSV here");
}

void add_optimizer_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--epsilon", f.epsilon, "improvement tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--restarts", f.restarts, "optimizer starts per player")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iterations", f.max_iterations, "simplex iterations per start")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "optimizer and sampling seed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Flags f;
  CLI::App app{"Quantum N-player games: play, verify equilibria, reproduce results"};
  app.name("qgames");
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "play one round and report payoffs");
  add_game_flags(run, f);
  add_output_flags(run, f);

  auto* verify = app.add_subcommand("verify", "check a profile for epsilon-Nash");
  add_game_flags(verify, f);
  verify->add_option("--class", f.strategy_class, "unitary or channel")
      ->check(CLI::IsMember({"unitary", "channel"}));
  add_optimizer_flags(verify, f);
  add_output_flags(verify, f);

  auto* br = app.add_subcommand("best-response", "best deviation for one player");
  add_game_flags(br, f);
  br->add_option("--player", f.player, "player number, starting at 1")->required();
  br->add_option("--class", f.strategy_class, "unitary or channel")
      ->check(CLI::IsMember({"unitary", "channel"}));
  add_optimizer_flags(br, f);
  add_output_flags(br, f);

  auto* reproduce = app.add_subcommand("reproduce", "run a named experiment");
  std::string names;
  for (const auto& n : experiment_names()) names += (names.empty() ? "" : ", ") + n;
  reproduce->add_option("experiment", f.experiment, names)
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  reproduce->add_option("--table", f.table, "payoff table for dilemma3 and fig2c");
  add_optimizer_flags(reproduce, f);
  add_output_flags(reproduce, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(f, out);
    if (*verify) return cmd_verify(f, out);
    if (*br) return cmd_best_response(f, out);
    return cmd_reproduce(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at '" << e.token() << "')\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qgames::app
