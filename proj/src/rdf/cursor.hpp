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
#include <cstdint>
#include <string>
#include <string_view>

#include "semlift/error.hpp"

namespace semlift::rdf::detail {

void append_utf8(std::string& out, std::uint32_t cp);
// Offset of the first invalid UTF-8 byte, or npos.
std::size_t find_invalid_utf8(std::string_view text);

// Character cursor over a whole document with line/column bookkeeping and the
// lexical productions N-Triples and Turtle share.
class Cursor {
 public:
  explicit Cursor(std::string_view text);

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  char get();
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) get();
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  // Skips spaces and tabs (and newlines when `newlines` is set) plus
  // '#' comments.
  void skip_space(bool newlines);

  // Text from the cursor up to the next whitespace, for error messages.
  std::string current_token() const;

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail(const std::string& message, const std::string& token) const;

  void expect(char c);

  // <...> with \u escapes decoded. The cursor must be on '<'.
  std::string read_iriref();
  // _:label. The cursor must be on '_'.
  std::string read_blank_label();
  // "..." or '...' (single-line). The cursor must be on the quote.
  std::string read_short_string();
  // """...""" or '''...'''. The cursor must be on the first quote.
  std::string read_long_string();
  // @tag. The cursor must be on '@'.
  std::string read_langtag();

 private:
  std::uint32_t read_hex(int digits);
  void read_escape(std::string& out);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace semlift::rdf::detail
