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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace semlift::rdf {

// Absolute IRI. Construction validates the syntax; comparison is exact
// codepoint (byte) equality.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend std::strong_ordering operator<=>(const Iri&, const Iri&) = default;

  // True when `value` is an absolute IRI: a scheme followed by ':' and no
  // whitespace, control characters, or any of <>"{}|^`\ .
  static bool is_valid(std::string_view value);

 private:
  std::string value_;
};

class BlankNode {
 public:
  // Labels match [A-Za-z0-9_]+.
  explicit BlankNode(std::string label);

  const std::string& label() const { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend std::strong_ordering operator<=>(const BlankNode&, const BlankNode&) = default;

  static bool is_valid_label(std::string_view label);

 private:
  std::string label_;
};

class Literal {
 public:
  // xsd:string literal.
  explicit Literal(std::string lexical);
  // Typed literal. A datatype of rdf:langString is rejected here; use
  // `tagged` instead.
  Literal(std::string lexical, Iri datatype);

  static Literal tagged(std::string lexical, std::string_view language);

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> language);

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;
};

// Lowercases a BCP-47 tag and checks its shape ([a-z]+(-[a-z0-9]+)*).
std::string normalize_language_tag(std::string_view tag);

// One RDF term. Terms order and compare by their canonical N-Triples
// rendering, which is computed once at construction.
class Term {
 public:
  Term(Iri iri);            // NOLINT(google-explicit-constructor)
  Term(BlankNode node);     // NOLINT(google-explicit-constructor)
  Term(Literal literal);    // NOLINT(google-explicit-constructor)

  static Term iri(std::string value) { return Term(Iri(std::move(value))); }
  static Term blank(std::string label) { return Term(BlankNode(std::move(label))); }
  static Term literal(std::string lexical) { return Term(Literal(std::move(lexical))); }
  static Term literal(std::string lexical, std::string_view datatype) {
    return Term(Literal(std::move(lexical), Iri(std::string(datatype))));
  }
  static Term lang_literal(std::string lexical, std::string_view language) {
    return Term(Literal::tagged(std::move(lexical), language));
  }

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }

  const Iri& as_iri() const { return std::get<Iri>(value_); }
  const BlankNode& as_blank() const { return std::get<BlankNode>(value_); }
  const Literal& as_literal() const { return std::get<Literal>(value_); }

  // IRI string, blank label, or literal lexical form.
  const std::string& value() const;

  // Canonical N-Triples rendering of this term.
  const std::string& ntriples() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.key_ <=> b.key_;
  }

 private:
  std::variant<Iri, BlankNode, Literal> value_;
  std::string key_;
};

class Triple {
 public:
  // Throws ValidationError when the subject is a literal or the predicate is
  // not an IRI.
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  // "<s> <p> <o> ." without a trailing newline.
  std::string ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.subject_ <=> b.subject_; c != 0) return c;
    if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
    return a.object_ <=> b.object_;
  }

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

// Escapes a literal lexical form for a double-quoted N-Triples/Turtle string.
std::string escape_string(std::string_view text);

}  // namespace semlift::rdf

template <>
struct std::hash<semlift::rdf::Term> {
  std::size_t operator()(const semlift::rdf::Term& t) const noexcept {
    return std::hash<std::string>{}(t.ntriples());
  }
};
