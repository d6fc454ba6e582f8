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

#ifndef QGAMES_TEXT_HPP_
#define QGAMES_TEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgames {

// 17 significant digits; parses back to the identical double.
std::string format_number(double value);

// Strict decimal parse of the whole token; nullopt on any trailing garbage.
std::optional<double> parse_number(std::string_view token);

std::string_view trim(std::string_view s);

// Splits on whitespace.
std::vector<std::string_view> split_whitespace(std::string_view s);

// Splits on `sep`, ignoring separators nested inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

}  // namespace qgames

#endif  // QGAMES_TEXT_HPP_
