// Copyright 2026 The Semlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semlift {

// Root of every error the toolkit throws. Modules derive their own kinds so
// the CLI can report "module: message" on one line.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid value (bad IRI, literal in subject position, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Syntax error in any textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::string token)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message +
              (token.empty() ? std::string() : " near '" + token + "'")),
        message_(std::move(message)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace semlift
