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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semlift/align/ontology.hpp"
#include "semlift/rdf/graph.hpp"

namespace semlift::align {

enum class MappingKind { kEquivalentClass, kSubClassOf, kEquivalentProperty, kSameIndividual };

std::string_view kind_name(MappingKind k);
// The axiom predicate emitted for a rule of this kind.
std::string_view kind_predicate(MappingKind k);

struct MappingRule {
  MappingKind kind = MappingKind::kEquivalentClass;
  std::string source;
  std::string target;
  double confidence = 1.0;
  std::string provenance = "manual";  // matcher id or "manual"

  // Throws ValidationError when source == target, an IRI is invalid or the
  // confidence lies outside [0, 1].
  void validate() const;
  friend bool operator==(const MappingRule&, const MappingRule&) = default;
};

// Shortest decimal that reads back as `c`, always with a fractional part.
std::string format_confidence(double c);

// One rule per line: kind TAB source TAB target TAB confidence TAB provenance.
std::string write_rules(const std::vector<MappingRule>& rules);
// Inverse of write_rules. Blank lines and lines starting with '#' are
// skipped. Throws ParseError with the line number.
std::vector<MappingRule> parse_rules(std::string_view text);

// Reads owl:equivalentClass, rdfs:subClassOf, owl:equivalentProperty and
// owl:sameAs axioms between IRIs as manual rules with confidence 1. A
// semlift:mappingProvenance literal on the source overrides "manual".
std::vector<MappingRule> rules_from_graph(const rdf::Graph& g);

// How an added triple was obtained.
enum class Derivation { kAxiom, kProvenance, kTypePropagation, kSameIndividual, kEquivalentProperty };

std::string_view derivation_name(Derivation d);

struct Justification {
  rdf::Triple added;
  Derivation derivation;
  std::size_t rule;                  // index into the rule list passed in
  std::optional<rdf::Triple> premise;  // absent for axiom/provenance triples
};

struct ApplyResult {
  rdf::Graph graph;
  std::vector<Justification> log;   // one entry per added triple, in order of addition
  std::vector<std::string> warnings;  // skipped rules
};

// Emits the axiom and provenance triples of every rule with confidence >=
// threshold, then closes the graph under: type propagation along
// SubClassOf/EquivalentClass rules, copying of subject-position assertions
// across SameIndividual rules and copying of assertions across
// EquivalentProperty rules. Rules naming an IRI found neither in `g` nor in
// any of `ontologies` are skipped with a warning.
ApplyResult apply_mappings(const rdf::Graph& g, const std::vector<MappingRule>& rules, double threshold,
                           const std::vector<const Ontology*>& ontologies = {});

// Tab-separated justification log: derivation, rule index, added triple,
// premise triple (or "-").
std::string write_justifications(const ApplyResult& result);

}  // namespace semlift::align
