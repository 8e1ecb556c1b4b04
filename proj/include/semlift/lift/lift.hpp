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

#include <string>
#include <string_view>
#include <vector>

#include "semlift/error.hpp"
#include "semlift/lift/schema.hpp"
#include "semlift/lift/xml.hpp"
#include "semlift/rdf/graph.hpp"

namespace semlift::lift {

struct LiftConfig {
  std::string lifting_namespace;   // classes and properties
  std::string instance_namespace;  // minted individuals
  std::string document_id;

  // Both namespaces must be absolute IRIs ending in '/' or '#'.
  void validate() const;
};

struct DerivedClass {
  std::string iri;
  std::string label;    // original element name
};

struct DerivedDatatypeProperty {
  std::string iri;
  std::string label;    // attribute or child element name
  std::string domain;   // class IRI
  SimpleType range = SimpleType::kString;
  std::string owner;    // element name of the domain class
  std::string name;     // attribute or child element name
  bool from_attribute = false;
};

struct DerivedObjectProperty {
  std::string iri;
  std::string label;    // child element name
  std::string domain;
  std::string range;
  std::string owner;
  std::string child;
};

// Ontology lifted from an XML schema, together with the lookup tables the
// instance converter needs.
struct DerivedOntology {
  std::string iri;  // lifting namespace without its trailing '/' or '#'
  std::string lifting_namespace;
  XmlSchemaModel schema;
  std::vector<DerivedClass> classes;  // declaration order
  std::vector<DerivedDatatypeProperty> datatype_properties;
  std::vector<DerivedObjectProperty> object_properties;

  const DerivedClass* class_for(std::string_view element) const;
  const DerivedDatatypeProperty* attribute_property(std::string_view element, std::string_view attr) const;
  const DerivedDatatypeProperty* child_property(std::string_view element, std::string_view child) const;
  const DerivedObjectProperty* object_property(std::string_view element, std::string_view child) const;

  // owl:Ontology header plus owl:Class / owl:DatatypeProperty /
  // owl:ObjectProperty declarations with domains, ranges and labels.
  rdf::Graph to_graph() const;
  // Prefixes used when writing the ontology as Turtle (":" is the lifting
  // namespace).
  rdf::PrefixMap prefixes() const;
  // One tab-separated line per derived class or property, for human review
  // before conversion.
  std::string review_report() const;
};

// Word splitting on '-', '_', '.' and case boundaries ("casNumber" ->
// cas|Number, "XMLFile" -> XML|File).
std::vector<std::string> split_words(std::string_view name);
std::string pascal_case(std::string_view name);
std::string camel_case(std::string_view name);

// Derives classes (one per complex element), datatype properties (one per
// attribute and simple child) and object properties (one per complex child).
// Name collisions are suffixed _2, _3, ... in declaration order.
DerivedOntology lift_schema(const XmlSchemaModel& schema, const LiftConfig& config);

class ConversionError : public Error {
 public:
  ConversionError(std::string location, const std::string& message)
      : Error("conversion error at " + location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Validates `doc` against the ontology's source schema and converts it into
// RDF: one individual per complex element (minted as instance namespace +
// document id + "/" + element + "/" + ordinal), typed with its class, with
// datatype-property triples for attributes and simple children and
// object-property triples for nested complex elements.
rdf::Graph convert_instance(const XmlDocument& doc, const DerivedOntology& ontology, const LiftConfig& config);

}  // namespace semlift::lift
