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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qgames/equilibria.hpp"
#include "qgames/protocol.hpp"

namespace py = pybind11;
using namespace qgames;

namespace {

Mode mode_of(const std::string& name) {
  if (name == "entangled") return Mode::kEntangled;
  if (name == "decoherent") return Mode::kDecoherent;
  if (name == "classical") return Mode::kClassical;
  throw py::value_error("mode must be entangled, decoherent or classical");
}

StrategyClass class_of(const std::string& name) {
  if (name == "unitary") return StrategyClass::kUnitary;
  if (name == "channel") return StrategyClass::kChannel;
  throw py::value_error("strategy_class must be unitary or channel");
}

OptimizerConfig optimizer(int restarts, int max_iterations, std::uint64_t seed) {
  OptimizerConfig c;
  c.restarts = restarts;
  c.max_iterations = max_iterations;
  c.rng_seed = seed;
  return c;
}

// Accepts a profile either as a grammar string or as a list of strategies.
StrategyProfile profile_of(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_profile(obj.cast<std::string>());
  return obj.cast<StrategyProfile>();
}

}  // namespace

PYBIND11_MODULE(_qgames, m) {
  m.doc() = "Quantum N-player games: play, best responses and equilibrium checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Error>(m, "QgamesError", PyExc_ValueError);

  py::class_<PayoffTable>(m, "PayoffTable")
      .def(py::init<int, std::vector<std::vector<double>>>(), py::arg("n_players"),
           py::arg("payoffs"))
      .def_property_readonly("n_players", &PayoffTable::n_players)
      .def_property_readonly("n_outcomes", &PayoffTable::n_outcomes)
      .def("payoff", &PayoffTable::payoff, py::arg("outcome"), py::arg("player"))
      .def("payoffs", &PayoffTable::payoffs, py::arg("outcome"))
      .def("__eq__", [](const PayoffTable& a, const PayoffTable& b) { return a == b; })
      .def("__repr__", [](const PayoffTable& t) {
        return "<PayoffTable players=" + std::to_string(t.n_players()) + ">";
      });

  m.def("minority_table", &minority_table, py::arg("n"));
  m.def("prisoners_dilemma_table", &prisoners_dilemma_table, py::arg("r") = 3.0,
        py::arg("s") = 0.0, py::arg("t") = 5.0, py::arg("p") = 1.0);
  m.def("constant_table", &constant_table, py::arg("n"), py::arg("value"));
  m.def("load_table", &load_table, py::arg("text"));
  m.def("save_table", &save_table, py::arg("table"));
  m.def("is_flip_symmetric", &is_flip_symmetric);
  m.def("dominant_action", &dominant_action, py::arg("table"), py::arg("player"));
  m.def("classical_nash_search", &classical_nash_search);
  m.def(
      "classical_mixed_payoffs",
      [](const PayoffTable& t, std::vector<double> p) {
        return classical_mixed_payoffs(t, {std::move(p)});
      },
      py::arg("table"), py::arg("flip_probabilities"));

  py::class_<Strategy>(m, "Strategy")
      .def_static("pure", &Strategy::pure, py::arg("bit"))
      .def_static("mixed", &Strategy::mixed, py::arg("flip_probability"))
      .def_static("unitary", &Strategy::unitary, py::arg("matrix"))
      .def_static("channel", &Strategy::channel, py::arg("kraus"))
      .def_property_readonly("is_coherent", &Strategy::is_coherent)
      .def("kraus", &Strategy::kraus)
      .def("as_unitary", &Strategy::as_unitary)
      .def("__repr__", &Strategy::describe);

  m.def("named_strategy", &named_strategy, py::arg("name"));
  m.def("parse_strategy", [](const std::string& s) { return parse_strategy(s); },
        py::arg("token"));
  m.def("parse_profile", [](const std::string& s) { return parse_profile(s); },
        py::arg("spec"));
  m.def("effective_flip_probability", &effective_flip_probability);
  m.def("choi_matrix", &choi_matrix);

  m.def(
      "play",
      [](const PayoffTable& t, const py::object& profile, const std::string& mode,
         bool final_gate) {
        const auto r = play(t, profile_of(profile), {mode_of(mode), final_gate});
        return py::make_tuple(r.distribution.probabilities, r.expected_payoffs);
      },
      py::arg("table"), py::arg("profile"), py::arg("mode") = "entangled",
      py::arg("final_gate") = true,
      "Returns (outcome probabilities, expected payoffs). Outcome index bit "
      "n-1-i belongs to player i.");
  m.def(
      "final_state",
      [](const py::object& profile, bool before_final_gate) {
        return ComplexVector(final_state(profile_of(profile), before_final_gate).amplitudes());
      },
      py::arg("profile"), py::arg("before_final_gate") = false);

  py::class_<PlayerNashEntry>(m, "PlayerNashEntry")
      .def_readonly("current_payoff", &PlayerNashEntry::current_payoff)
      .def_readonly("best_response_value", &PlayerNashEntry::best_response_value)
      .def_readonly("improvement", &PlayerNashEntry::improvement)
      .def_readonly("best_response", &PlayerNashEntry::best_response)
      .def_readonly("strict", &PlayerNashEntry::strict);
  py::class_<NashReport>(m, "NashReport")
      .def_readonly("players", &NashReport::players)
      .def_readonly("epsilon", &NashReport::epsilon)
      .def_readonly("is_nash", &NashReport::is_nash)
      .def_property_readonly("max_improvement", &NashReport::max_improvement);
  py::class_<BestResponseResult>(m, "BestResponseResult")
      .def_readonly("strategy", &BestResponseResult::strategy)
      .def_readonly("value", &BestResponseResult::value)
      .def_readonly("incumbent_value", &BestResponseResult::incumbent_value)
      .def_readonly("improvement", &BestResponseResult::improvement);

  m.def(
      "best_response",
      [](const PayoffTable& t, const py::object& profile, int player,
         const std::string& cls, int restarts, int max_iterations, std::uint64_t seed,
         const std::string& mode) {
        return best_response(t, profile_of(profile), player, class_of(cls),
                             optimizer(restarts, max_iterations, seed),
                             {mode_of(mode), true});
      },
      py::arg("table"), py::arg("profile"), py::arg("player"),
      py::arg("strategy_class") = "channel", py::arg("restarts") = 32,
      py::arg("max_iterations") = 2000, py::arg("seed") = 0,
      py::arg("mode") = "entangled", "player is 0-based");
  m.def(
      "verify_nash",
      [](const PayoffTable& t, const py::object& profile, const std::string& cls,
         double epsilon, int restarts, int max_iterations, std::uint64_t seed,
         const std::string& mode) {
        return verify_nash(t, profile_of(profile), class_of(cls), epsilon,
                           optimizer(restarts, max_iterations, seed),
                           {mode_of(mode), true});
      },
      py::arg("table"), py::arg("profile"), py::arg("strategy_class") = "channel",
      py::arg("epsilon") = kDefaultEpsilon, py::arg("restarts") = 32,
      py::arg("max_iterations") = 2000, py::arg("seed") = 0,
      py::arg("mode") = "entangled");
  m.def(
      "payoff_upper_bound",
      [](const PayoffTable& t, const py::object& profile, int player) {
        return payoff_upper_bound(t, profile_of(profile), player);
      },
      py::arg("table"), py::arg("profile"), py::arg("player"));
}
