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

#ifndef QGAMES_ERROR_HPP_
#define QGAMES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qgames {

// Raised for any violated precondition: bad dimensions, non-unitary
// operators, incomplete Kraus sets, malformed tables.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text parsers. `token()` is the offending piece of input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}

  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace qgames

#endif  // QGAMES_ERROR_HPP_
