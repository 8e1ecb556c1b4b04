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

#include "cursor.hpp"

#include "semlift/rdf/term.hpp"

namespace semlift::rdf::detail {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::size_t find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

Cursor::Cursor(std::string_view text) : text_(text) {
  if (std::size_t bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    // Locate the offending byte for the report.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < bad; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError("invalid UTF-8", line, col, "");
  }
}

char Cursor::get() {
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
    ++column_;
  }
  return c;
}

void Cursor::skip_space(bool newlines) {
  while (!at_end()) {
    char c = peek();
    if (c == ' ' || c == '\t' || (newlines && (c == '\n' || c == '\r'))) {
      get();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n' && peek() != '\r') get();
    } else {
      break;
    }
  }
}

std::string Cursor::current_token() const {
  if (at_end()) return "<end of input>";
  std::size_t end = pos_;
  while (end < text_.size() && end - pos_ < 40) {
    char c = text_[end];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
    ++end;
  }
  return std::string(text_.substr(pos_, end - pos_));
}

void Cursor::fail(const std::string& message) const { fail(message, current_token()); }

void Cursor::fail(const std::string& message, const std::string& token) const {
  throw ParseError(message, line_, column_, token);
}

void Cursor::expect(char c) {
  if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
  get();
}

std::uint32_t Cursor::read_hex(int digits) {
  std::uint32_t value = 0;
  for (int i = 0; i < digits; ++i) {
    char c = at_end() ? '\0' : peek();
    std::uint32_t d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      fail("invalid hex digit in escape");
    }
    value = value * 16 + d;
    get();
  }
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) fail("escape is not a Unicode scalar value");
  return value;
}

void Cursor::read_escape(std::string& out) {
  // Cursor is just past the backslash.
  if (at_end()) fail("unterminated escape");
  char c = get();
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    case 'u': append_utf8(out, read_hex(4)); break;
    case 'U': append_utf8(out, read_hex(8)); break;
    default: fail("invalid escape sequence", std::string("\\") + c);
  }
}

std::string Cursor::read_iriref() {
  std::size_t start_line = line_, start_col = column_;
  expect('<');
  std::string out;
  while (true) {
    if (at_end() || peek() == '\n') throw ParseError("unterminated IRI", start_line, start_col, "<" + out);
    char c = get();
    if (c == '>') break;
    if (c == '\\') {
      if (peek() != 'u' && peek() != 'U') fail("invalid escape in IRI");
      char kind = get();
      append_utf8(out, read_hex(kind == 'u' ? 4 : 8));
      continue;
    }
    out += c;
  }
  if (!Iri::is_valid(out)) {
    throw ParseError(out.find(':') == std::string::npos ? "relative IRI not supported" : "invalid IRI",
                     start_line, start_col, "<" + out + ">");
  }
  return out;
}

std::string Cursor::read_blank_label() {
  expect('_');
  expect(':');
  std::string label;
  while (!at_end()) {
    char c = peek();
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) break;
    label += get();
  }
  if (label.empty()) fail("invalid blank node label");
  char next = peek();
  if (!at_end() && next != ' ' && next != '\t' && next != '\n' && next != '\r' && next != '.' &&
      next != ';' && next != ',' && next != '#') {
    fail("blank node labels must match [A-Za-z0-9_]+", "_:" + label + next);
  }
  return label;
}

std::string Cursor::read_short_string() {
  std::size_t start_line = line_, start_col = column_;
  char quote = get();
  std::string out;
  while (true) {
    if (at_end() || peek() == '\n' || peek() == '\r') {
      throw ParseError("unterminated string literal", start_line, start_col, quote + out);
    }
    char c = get();
    if (c == quote) break;
    if (c == '\\') {
      read_escape(out);
    } else {
      out += c;
    }
  }
  return out;
}

std::string Cursor::read_long_string() {
  std::size_t start_line = line_, start_col = column_;
  char quote = peek();
  advance(3);
  std::string out;
  const std::string closing(3, quote);
  while (true) {
    if (at_end()) throw ParseError("unterminated long string literal", start_line, start_col, closing);
    if (starts_with(closing)) {
      // A run of more than three quotes closes on the last three.
      if (peek(3) == quote) {
        out += get();
        continue;
      }
      advance(3);
      break;
    }
    char c = get();
    if (c == '\\') {
      read_escape(out);
    } else {
      out += c;
    }
  }
  return out;
}

std::string Cursor::read_langtag() {
  expect('@');
  std::string tag;
  while (!at_end()) {
    char c = peek();
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) break;
    tag += get();
  }
  try {
    return normalize_language_tag(tag);
  } catch (const ValidationError&) {
    fail("invalid language tag", "@" + tag);
  }
}

}  // namespace semlift::rdf::detail
