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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semlift/error.hpp"
#include "semlift/rdf/graph.hpp"

namespace semlift::align {

class OntologyError : public Error {
 public:
  using Error::Error;
};

// A label with its language tag; `language` is empty for untagged strings.
struct Label {
  std::string text;
  std::string language;
  friend auto operator<=>(const Label&, const Label&) = default;
};

enum class PropertyKind { kDatatype, kObject };

struct ClassDecl {
  std::string iri;
  std::vector<Label> labels;  // sorted, unique
};

struct PropertyDecl {
  std::string iri;
  PropertyKind kind = PropertyKind::kObject;
  std::vector<Label> labels;
};

// Classes, properties and hierarchy of one ontology document or of a
// document together with its import closure.
struct Ontology {
  std::string id;  // IRI of the owl:Ontology header, empty when absent
  std::map<std::string, ClassDecl> classes;
  std::map<std::string, PropertyDecl> properties;
  std::set<std::pair<std::string, std::string>> subclass_of;     // (sub, super)
  std::set<std::pair<std::string, std::string>> subproperty_of;  // (sub, super)
  std::vector<std::string> imports;    // direct imports of the loaded documents
  std::vector<std::string> documents;  // ids of every merged document, imports first
  rdf::Graph graph;                    // union of all merged documents

  bool is_class(const std::string& iri) const { return classes.count(iri) != 0; }
  bool is_property(const std::string& iri) const { return properties.count(iri) != 0; }

  std::set<std::string> direct_superclasses(const std::string& iri) const;
  std::set<std::string> direct_subclasses(const std::string& iri) const;
  // Transitive, excluding `iri` itself.
  std::set<std::string> ancestors(const std::string& iri) const;
  std::set<std::string> descendants(const std::string& iri) const;
};

// Reads declarations from one graph. Classes are subjects typed owl:Class or
// rdfs:Class plus both ends of rdfs:subClassOf; properties are subjects typed
// owl:DatatypeProperty, owl:ObjectProperty, owl:AnnotationProperty or
// rdf:Property. Labels come from rdfs:label, skos:prefLabel and
// skos:altLabel. Throws OntologyError on a subclass cycle.
Ontology ontology_from_graph(const rdf::Graph& g);

// Loads Turtle documents and resolves owl:imports against the given files and
// every *.ttl file in `import_dirs` (local files only). Throws OntologyError
// naming a missing import or listing an import cycle ("a -> b -> a").
Ontology load_ontology(const std::vector<std::filesystem::path>& files,
                       const std::vector<std::filesystem::path>& import_dirs);

}  // namespace semlift::align
