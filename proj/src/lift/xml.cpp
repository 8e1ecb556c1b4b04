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

#include "semlift/lift/xml.hpp"

#include <map>

#include "semlift/error.hpp"

namespace semlift::lift {
namespace {

constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

void append_utf8(std::string& out, unsigned long cp) {
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

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':' ||
         (static_cast<unsigned char>(c) & 0x80) != 0;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

struct RawAttribute {
  std::string qname;
  std::string value;
  std::size_t line;
  std::size_t column;
};

class XmlReader {
 public:
  explicit XmlReader(std::string_view text) : text_(text) {}

  XmlDocument read() {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    misc(true);
    if (at_end() || peek() != '<') fail("expected root element");
    XmlDocument doc;
    doc.root = element();
    misc(false);
    if (!at_end()) fail("content after the root element");
    return doc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) get();
  }

  std::string token() const {
    std::size_t end = pos_;
    while (end < text_.size() && end - pos_ < 30 && !is_space(text_[end])) ++end;
    return at_end() ? "<end of input>" : std::string(text_.substr(pos_, end - pos_));
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("XML syntax error: " + message, line_, column_, token());
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) get();
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    advance(s.size());
  }

  // Whitespace, comments and processing instructions outside the root.
  void misc(bool prolog) {
    while (true) {
      skip_space();
      if (starts_with("<?")) {
        processing_instruction();
      } else if (starts_with("<!--")) {
        comment();
      } else if (starts_with("<!DOCTYPE")) {
        if (!prolog) fail("DOCTYPE after the root element");
        throw ParseError("unsupported construct: DOCTYPE", line_, column_, "<!DOCTYPE");
      } else {
        return;
      }
    }
  }

  void processing_instruction() {
    advance(2);
    while (!at_end() && !starts_with("?>")) get();
    if (at_end()) fail("unterminated processing instruction");
    advance(2);
  }

  void comment() {
    advance(4);
    while (!at_end() && !starts_with("-->")) get();
    if (at_end()) fail("unterminated comment");
    advance(3);
  }

  std::string name() {
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    std::string out;
    while (!at_end() && is_name_char(peek())) out += get();
    return out;
  }

  void reference(std::string& out) {
    get();  // '&'
    std::string ref;
    while (!at_end() && peek() != ';' && ref.size() < 12) ref += get();
    if (at_end() || peek() != ';') fail("unterminated entity reference");
    get();
    if (ref == "lt") {
      out += '<';
    } else if (ref == "gt") {
      out += '>';
    } else if (ref == "amp") {
      out += '&';
    } else if (ref == "quot") {
      out += '"';
    } else if (ref == "apos") {
      out += '\'';
    } else if (ref.size() > 1 && ref[0] == '#') {
      bool hex = ref[1] == 'x';
      std::string digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("invalid character reference");
      unsigned long cp = 0;
      for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9') {
          d = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          d = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          d = c - 'A' + 10;
        } else {
          fail("invalid character reference");
        }
        cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(d);
        if (cp > 0x10FFFF) fail("invalid character reference");
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid character reference");
      append_utf8(out, cp);
    } else {
      fail("unknown entity '&" + ref + ";'");
    }
  }

  std::string attribute_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    get();
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        get();
        break;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        reference(out);
      } else if (c == '\t' || c == '\n' || c == '\r') {
        get();
        out += ' ';
      } else {
        out += get();
      }
    }
    return out;
  }

  std::string resolve(const std::string& prefix, bool is_attribute) const {
    if (prefix.empty() && is_attribute) return "";
    if (prefix == "xml") return std::string(kXmlNamespace);
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(prefix);
      if (found != it->end()) return found->second;
    }
    if (prefix.empty()) return "";
    throw ParseError("XML namespace error: unbound prefix '" + prefix + "'", line_, column_, prefix + ":");
  }

  static std::pair<std::string, std::string> split_qname(const std::string& qname) {
    std::size_t colon = qname.find(':');
    if (colon == std::string::npos) return {"", qname};
    return {qname.substr(0, colon), qname.substr(colon + 1)};
  }

  XmlElement element() {
    XmlElement el;
    el.line = line_;
    el.column = column_;
    expect("<");
    std::string qname = name();

    std::vector<RawAttribute> raw;
    std::map<std::string, std::string> declared;
    while (true) {
      bool had_space = !at_end() && is_space(peek());
      skip_space();
      if (at_end()) fail("unterminated start tag");
      if (peek() == '>' || starts_with("/>")) break;
      if (!had_space) fail("expected whitespace between attributes");
      RawAttribute attr{"", "", line_, column_};
      attr.qname = name();
      skip_space();
      expect("=");
      skip_space();
      attr.value = attribute_value();
      if (attr.qname == "xmlns") {
        declared[""] = attr.value;
      } else if (attr.qname.starts_with("xmlns:")) {
        declared[attr.qname.substr(6)] = attr.value;
      } else {
        raw.push_back(std::move(attr));
      }
    }
    scopes_.push_back(std::move(declared));

    auto [prefix, local] = split_qname(qname);
    el.name = local;
    el.namespace_uri = resolve(prefix, false);
    for (const RawAttribute& a : raw) {
      auto [aprefix, alocal] = split_qname(a.qname);
      XmlAttribute attr{alocal, resolve(aprefix, true), a.value};
      for (const XmlAttribute& existing : el.attributes) {
        if (existing.name == attr.name && existing.namespace_uri == attr.namespace_uri) {
          throw ParseError("XML syntax error: duplicate attribute", a.line, a.column, a.qname);
        }
      }
      el.attributes.push_back(std::move(attr));
    }

    if (starts_with("/>")) {
      advance(2);
      scopes_.pop_back();
      return el;
    }
    expect(">");
    content(el, qname);
    scopes_.pop_back();
    return el;
  }

  void content(XmlElement& el, const std::string& qname) {
    while (true) {
      if (at_end()) fail("missing end tag for <" + qname + ">");
      if (starts_with("</")) {
        advance(2);
        std::string closing = name();
        if (closing != qname) fail("mismatched end tag </" + closing + ">, expected </" + qname + ">");
        skip_space();
        expect(">");
        return;
      }
      if (starts_with("<!--")) {
        comment();
      } else if (starts_with("<![CDATA[")) {
        advance(9);
        while (!at_end() && !starts_with("]]>")) el.text += get();
        if (at_end()) fail("unterminated CDATA section");
        advance(3);
      } else if (starts_with("<?")) {
        processing_instruction();
      } else if (peek() == '<') {
        el.children.push_back(element());
      } else if (peek() == '&') {
        reference(el.text);
      } else {
        char c = get();
        // Line ends are normalized to '\n'.
        if (c == '\r') {
          if (peek() == '\n') get();
          c = '\n';
        }
        el.text += c;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<std::map<std::string, std::string>> scopes_;
};

}  // namespace

const XmlAttribute* XmlElement::attribute(std::string_view local_name) const {
  for (const XmlAttribute& a : attributes) {
    if (a.name == local_name) return &a;
  }
  return nullptr;
}

XmlDocument parse_document(std::string_view text) { return XmlReader(text).read(); }

}  // namespace semlift::lift
