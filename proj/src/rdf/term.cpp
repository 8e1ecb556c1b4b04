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

#include "semlift/rdf/term.hpp"

#include <cstdio>

#include "semlift/error.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::rdf {
namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string render_literal(const Literal& lit) {
  std::string out = "\"" + escape_string(lit.lexical()) + "\"";
  if (lit.language()) {
    out += '@';
    out += *lit.language();
  } else if (lit.datatype().str() != vocab::kXsdString) {
    out += "^^<" + lit.datatype().str() + ">";
  }
  return out;
}

}  // namespace

bool Iri::is_valid(std::string_view value) {
  std::size_t colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_alpha(value[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = value[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  for (char ch : value) {
    auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == 0x7f) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw ValidationError("invalid IRI: '" + value_ + "'");
}

bool BlankNode::is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) throw ValidationError("invalid blank node label: '" + label_ + "'");
}

std::string normalize_language_tag(std::string_view tag) {
  std::string out;
  out.reserve(tag.size());
  std::size_t part_len = 0;
  bool first_part = true;
  for (char c : tag) {
    if (c == '-') {
      if (part_len == 0) throw ValidationError("invalid language tag: '" + std::string(tag) + "'");
      first_part = false;
      part_len = 0;
      out += c;
      continue;
    }
    bool ok = is_alpha(c) || (!first_part && is_digit(c));
    if (!ok) throw ValidationError("invalid language tag: '" + std::string(tag) + "'");
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    ++part_len;
  }
  if (part_len == 0) throw ValidationError("invalid language tag: '" + std::string(tag) + "'");
  return out;
}

Literal::Literal(std::string lexical)
    : Literal(std::move(lexical), Iri(std::string(vocab::kXsdString)), std::nullopt) {}

Literal::Literal(std::string lexical, Iri datatype)
    : Literal(std::move(lexical), std::move(datatype), std::nullopt) {
  if (datatype_.str() == vocab::kRdfLangString) {
    throw ValidationError("rdf:langString literal requires a language tag");
  }
}

Literal::Literal(std::string lexical, Iri datatype, std::optional<std::string> language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {}

Literal Literal::tagged(std::string lexical, std::string_view language) {
  return Literal(std::move(lexical), Iri(std::string(vocab::kRdfLangString)),
                 normalize_language_tag(language));
}

Term::Term(Iri iri) : value_(std::move(iri)) { key_ = "<" + as_iri().str() + ">"; }
Term::Term(BlankNode node) : value_(std::move(node)) { key_ = "_:" + as_blank().label(); }
Term::Term(Literal literal) : value_(std::move(literal)) { key_ = render_literal(as_literal()); }

const std::string& Term::value() const {
  if (is_iri()) return as_iri().str();
  if (is_blank()) return as_blank().label();
  return as_literal().lexical();
}

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (subject_.is_literal()) {
    throw ValidationError("literal in subject position: " + subject_.ntriples());
  }
  if (!predicate_.is_iri()) {
    throw ValidationError("predicate must be an IRI: " + predicate_.ntriples());
  }
}

std::string Triple::ntriples() const {
  return subject_.ntriples() + " " + predicate_.ntriples() + " " + object_.ntriples() + " .";
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace semlift::rdf
