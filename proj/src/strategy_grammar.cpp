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

#include "qgames/strategies.hpp"
#include "qgames/text.hpp"

namespace qgames {

namespace {

// "NAME(args)" -> args, or nullopt when the token is not of that shape.
std::optional<std::string_view> call_args(std::string_view token,
                                          std::string_view name) {
  if (token.size() < name.size() + 2) return std::nullopt;
  if (token.substr(0, name.size()) != name) return std::nullopt;
  if (token[name.size()] != '(' || token.back() != ')') return std::nullopt;
  return trim(token.substr(name.size() + 1, token.size() - name.size() - 2));
}

std::vector<double> parse_numbers(std::string_view args,
                                  std::string_view token) {
  std::vector<double> out;
  for (auto part : split_top_level(args, ',')) {
    const auto v = parse_number(part);
    if (!v) {
      throw ParseError("invalid number '" + std::string(part) +
                           "' in strategy",
                       std::string(token));
    }
    out.push_back(*v);
  }
  return out;
}

}  // namespace

Strategy parse_strategy(std::string_view token,
                        const std::filesystem::path& base_dir) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty strategy", "");

  if (auto args = call_args(token, "U")) {
    const auto n = parse_numbers(*args, token);
    if (n.size() != 4) {
      throw ParseError("U(...) takes four quaternion components",
                       std::string(token));
    }
    Quaternion q{n[0], n[1], n[2], n[3]};
    const double norm = q.norm();
    if (!(norm > 0.0)) {
      throw ParseError("zero quaternion", std::string(token));
    }
    // Typed-in components are rarely unit to 1e-10; normalize them.
    return su2_from_quaternion({q.n0 / norm, q.n1 / norm, q.n2 / norm,
                                q.n3 / norm});
  }
  if (auto args = call_args(token, "M")) {
    const auto p = parse_numbers(*args, token);
    if (p.size() != 1 || p[0] < 0.0 || p[0] > 1.0) {
      throw ParseError("M(p) takes one probability in [0,1]",
                       std::string(token));
    }
    return Strategy::mixed(p[0]);
  }
  if (auto args = call_args(token, "K")) {
    if (args->empty()) throw ParseError("K() needs a file", std::string(token));
    std::filesystem::path path{std::string(*args)};
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    try {
      return Strategy::channel(load_kraus_file(path));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), std::string(token));
    }
  }
  try {
    return named_strategy(token);
  } catch (const ParseError&) {
    throw ParseError("unknown strategy '" + std::string(token) +
                         "' (expected I, F, H, A, IY, U(...), M(p), K(file))",
                     std::string(token));
  }
}

StrategyProfile parse_profile(std::string_view spec,
                              const std::filesystem::path& base_dir) {
  StrategyProfile profile;
  for (auto token : split_top_level(spec, ',')) {
    profile.push_back(parse_strategy(token, base_dir));
  }
  return profile;
}

std::vector<Mat2> parse_kraus_text(std::string_view text) {
  std::vector<Mat2> kraus;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_whitespace(trim(line));
    if (fields.empty()) continue;
    if (fields.size() != 8) {
      throw ParseError("Kraus line " + std::to_string(line_no) +
                           " needs 8 reals, got " +
                           std::to_string(fields.size()),
                       std::string(trim(line)));
    }
    Mat2 a;
    for (int k = 0; k < 4; ++k) {
      const auto re = parse_number(fields[2 * k]);
      const auto im = parse_number(fields[2 * k + 1]);
      if (!re || !im) {
        throw ParseError("non-numeric Kraus entry on line " +
                             std::to_string(line_no),
                         std::string(trim(line)));
      }
      a(k / 2, k % 2) = Complex(*re, *im);
    }
    kraus.push_back(a);
  }
  if (kraus.empty()) throw ParseError("no Kraus operators found", "");
  return kraus;
}

std::vector<Mat2> load_kraus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open Kraus file " + path.string(),
                     path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kraus_text(buf.str());
}

}  // namespace qgames
