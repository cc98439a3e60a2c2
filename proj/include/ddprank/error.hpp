//
// Copyright 2026 The ddprank Authors
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

#ifndef DDPRANK_ERROR_HPP_
#define DDPRANK_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddprank {

// Malformed profile or answer file. Carries the 1-based line number (0 when
// the problem is not tied to a line, e.g. an empty file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid experiment configuration; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Request exceeds a hard size guard (exhaustive search).
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ddprank

#endif  // DDPRANK_ERROR_HPP_
