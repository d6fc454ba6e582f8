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

#include "app/report.hpp"

#include <algorithm>

#include "qgames/text.hpp"

namespace qgames::app {

namespace {

std::string render(const std::variant<double, std::string>& v) {
  if (const double* d = std::get_if<double>(&v)) return format_number(*d);
  return std::get<std::string>(v);
}

// RFC 4180 quoting, only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

void Report::value(std::string section, std::string key, double v) {
  rows_.push_back({std::move(section), std::move(key), v});
}

void Report::text(std::string section, std::string key, std::string v) {
  rows_.push_back({std::move(section), std::move(key), std::move(v)});
}

void Report::check(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed ? Verdict::kPass : Verdict::kFail,
                     std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks_.push_back({std::move(name), Verdict::kSkipped, std::move(detail)});
}

bool Report::passed() const {
  return std::none_of(checks_.begin(), checks_.end(),
                      [](const Check& c) { return c.verdict == Verdict::kFail; });
}

bool Report::any_skipped() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) {
    return c.verdict == Verdict::kSkipped;
  });
}

void Report::write_text(std::ostream& out) const {
  std::string section;
  for (const ReportRow& r : rows_) {
    if (r.section != section) {
      section = r.section;
      out << "[" << section << "]\n";
    }
    out << "  " << r.key << " = " << render(r.value) << "\n";
  }
  for (const Check& c : checks_) {
    out << verdict_name(c.verdict) << " " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

void Report::write_csv(std::ostream& out) const {
  out << "section,key,value\n";
  for (const ReportRow& r : rows_) {
    out << csv_field(r.section) << "," << csv_field(r.key) << ","
        << csv_field(render(r.value)) << "\n";
  }
  for (const Check& c : checks_) {
    out << "check," << csv_field(c.name) << "," << verdict_name(c.verdict) << "\n";
  }
}

}  // namespace qgames::app
