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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "qgames/games.hpp"
#include "qgames/text.hpp"

namespace qgames {

namespace {

std::string line_ref(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

}  // namespace

PayoffTable load_table(std::string_view text) {
  int n = 0;
  std::vector<std::vector<double>> rows;
  std::vector<bool> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (n == 0) {
      constexpr std::string_view kHeader = "players:";
      if (line.substr(0, kHeader.size()) != kHeader) {
        throw ParseError(line_ref(line_no) + "expected 'players: N' header",
                         std::string(line));
      }
      const auto count = trim(line.substr(kHeader.size()));
      const auto value = parse_number(count);
      if (!value || *value < 1 || *value > kMaxQubits ||
          *value != static_cast<int>(*value)) {
        throw ParseError(line_ref(line_no) + "invalid player count",
                         std::string(count));
      }
      n = static_cast<int>(*value);
      rows.assign(std::size_t{1} << n, {});
      seen.assign(rows.size(), false);
      continue;
    }

    const auto fields = split_whitespace(line);
    if (static_cast<int>(fields[0].size()) != n) {
      throw ParseError(line_ref(line_no) + "outcome must have " +
                           std::to_string(n) + " bits",
                       std::string(fields[0]));
    }
    const Outcome z = from_bitstring(fields[0]);
    if (static_cast<int>(fields.size()) != n + 1) {
      throw ParseError(line_ref(line_no) + "outcome " + std::string(fields[0]) +
                           " needs " + std::to_string(n) + " payoffs, got " +
                           std::to_string(fields.size() - 1),
                       std::string(line));
    }
    if (seen[z]) {
      throw ParseError(line_ref(line_no) + "duplicate row for outcome " +
                           std::string(fields[0]),
                       std::string(fields[0]));
    }
    std::vector<double> payoffs;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto v = parse_number(fields[i]);
      if (!v) {
        throw ParseError(line_ref(line_no) + "non-numeric payoff",
                         std::string(fields[i]));
      }
      payoffs.push_back(*v);
    }
    rows[z] = std::move(payoffs);
    seen[z] = true;
  }

  if (n == 0) throw ParseError("missing 'players: N' header", "");
  for (Outcome z = 0; z < seen.size(); ++z) {
    if (!seen[z]) {
      throw ParseError("missing row for outcome " + to_bitstring(z, n),
                       to_bitstring(z, n));
    }
  }
  return PayoffTable(n, std::move(rows));
}

std::string save_table(const PayoffTable& table) {
  std::string out = "players: " + std::to_string(table.n_players()) + "\n";
  for (Outcome z = 0; z < table.n_outcomes(); ++z) {
    out += to_bitstring(z, table.n_players());
    for (double v : table.payoffs(z)) {
      out += ' ';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

PayoffTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str());
}

void write_table_file(const PayoffTable& table,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write table file " + path.string());
  out << save_table(table);
}

}  // namespace qgames
