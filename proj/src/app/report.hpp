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

#ifndef QGAMES_APP_REPORT_HPP_
#define QGAMES_APP_REPORT_HPP_

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qgames::app {

enum class Verdict { kPass, kFail, kSkipped };

struct ReportRow {
  std::string section;
  std::string key;
  std::variant<double, std::string> value;
};

struct Check {
  std::string name;
  Verdict verdict;
  std::string detail;
};

// Ordered record of what a command computed. The text and CSV renderings
// carry the same numbers, both at 17 significant digits.
class Report {
 public:
  void value(std::string section, std::string key, double v);
  void text(std::string section, std::string key, std::string v);
  void check(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string detail);

  const std::vector<ReportRow>& rows() const { return rows_; }
  const std::vector<Check>& checks() const { return checks_; }
  // True when no check failed; skipped checks do not count as failures.
  bool passed() const;
  bool any_skipped() const;

  void write_text(std::ostream& out) const;
  void write_csv(std::ostream& out) const;

 private:
  std::vector<ReportRow> rows_;
  std::vector<Check> checks_;
};

const char* verdict_name(Verdict v);

}  // namespace qgames::app

#endif  // QGAMES_APP_REPORT_HPP_
