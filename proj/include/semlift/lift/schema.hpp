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
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semlift/error.hpp"

namespace semlift::lift {

class SchemaError : public Error {
 public:
  using Error::Error;
};

enum class SimpleType { kString, kInteger, kDecimal, kBoolean, kDate };

// "string", "integer", ... as written after the xs: prefix.
std::string_view type_name(SimpleType t);
// The xsd: datatype IRI for literals of this type.
std::string_view datatype_iri(SimpleType t);
std::optional<SimpleType> simple_type_from_name(std::string_view local_name);

// Lexical-space check. Non-string values are checked after trimming XML
// whitespace, which is also what `lexical_form` returns for them.
bool is_valid_lexical(SimpleType t, std::string_view value);
std::string lexical_form(SimpleType t, std::string_view value);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct ElementRef {
  std::string name;
  std::size_t min = 1;
  std::size_t max = 1;  // kUnbounded for maxOccurs="unbounded"
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

struct AttrDecl {
  std::string name;
  SimpleType type = SimpleType::kString;
  bool required = false;
  friend bool operator==(const AttrDecl&, const AttrDecl&) = default;
};

struct ComplexContent {
  std::vector<ElementRef> children;  // sequence order
  std::vector<AttrDecl> attributes;
  friend bool operator==(const ComplexContent&, const ComplexContent&) = default;
};

struct ElementDecl {
  std::string name;
  std::variant<ComplexContent, SimpleType> content;

  bool is_complex() const { return std::holds_alternative<ComplexContent>(content); }
  const ComplexContent& complex() const { return std::get<ComplexContent>(content); }
  SimpleType simple() const { return std::get<SimpleType>(content); }
  friend bool operator==(const ElementDecl&, const ElementDecl&) = default;
};

struct XmlSchemaModel {
  std::string target_namespace;
  std::vector<ElementDecl> elements;  // declaration order

  const ElementDecl* find(std::string_view name) const;

  // Throws SchemaError on duplicate element names, unresolved references
  // (all of them listed) or min > max.
  void validate() const;

  friend bool operator==(const XmlSchemaModel&, const XmlSchemaModel&) = default;
};

// Reads the supported schema subset: global xs:element declarations whose
// content is a simple built-in type or an xs:complexType holding at most one
// xs:sequence of `xs:element ref=...` particles plus xs:attribute
// declarations. Anything else throws SchemaError("unsupported construct:
// ..."); XML syntax errors throw ParseError.
XmlSchemaModel parse_schema(std::string_view text);

}  // namespace semlift::lift
