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

#include <map>
#include <string>
#include <vector>

#include "semlift/align/mapping.hpp"
#include "semlift/align/ontology.hpp"
#include "semlift/rdf/graph.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::align {

struct ExternalId {
  std::string scheme;
  std::string value;  // verbatim
  friend auto operator<=>(const ExternalId&, const ExternalId&) = default;
};

struct EntityFacts {
  std::vector<Label> names;
  std::vector<std::string> formulas;
  std::vector<ExternalId> ids;
};

// Evidence per entity IRI.
using IdentifierFacts = std::map<std::string, EntityFacts>;

// Predicates read by extract_facts.
struct FactPredicates {
  std::vector<std::string> names{std::string(vocab::kRdfsLabel), std::string(vocab::kSkosPrefLabel),
                                 std::string(vocab::kSkosAltLabel)};
  std::vector<std::string> formulas{std::string(vocab::kSemliftFormula)};
  // Predicates under this namespace carry identifiers; the local name is the
  // scheme. Empty disables it.
  std::string identifier_namespace{vocab::kSemliftIdentifierNs};
  // Additional predicate -> scheme bindings.
  std::map<std::string, std::string> identifiers;
};

// Collects literal-valued evidence for every IRI subject of `g`.
IdentifierFacts extract_facts(const rdf::Graph& g, const FactPredicates& predicates = {});

struct MatcherConfig {
  double external_id = 1.0;
  double formula = 0.9;
  double label = 0.8;
  double label_multilingual = 0.6;
};

// One side of an alignment: the ontology decides whether an entity is a
// class, a property or an individual; the facts supply the evidence.
struct AlignmentInput {
  const Ontology& ontology;
  const IdentifierFacts& facts;
};

// Candidate rules from `a` (source) to `b` (target). Matchers:
//   external-id         same scheme and identical value
//   formula             identical after removing whitespace
//   label               identical normalized label, same language or one untagged
//   label-multilingual  identical normalized label, different languages
// Only class-class, property-property and individual-individual pairs are
// considered. Each pair keeps its best rule. Sorted by confidence
// descending, then source, then target.
std::vector<MappingRule> suggest_alignments(const AlignmentInput& a, const AlignmentInput& b,
                                            const MatcherConfig& config = {});

}  // namespace semlift::align
