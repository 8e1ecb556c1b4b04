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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semlift/align/ontology.hpp"
#include "semlift/enrich/enrich.hpp"
#include "semlift/rdf/graph.hpp"
#include "semlift/search/autocomplete.hpp"

namespace semlift::search {

enum class FacetKind { kClassHierarchy, kPropertyValue, kCategory };

std::string_view facet_kind_name(FacetKind k);
// Inverse of facet_kind_name; throws QueryError on an unknown name.
FacetKind facet_kind_from_name(std::string_view name);

struct FacetDefinition {
  std::string id;
  FacetKind kind = FacetKind::kClassHierarchy;
  std::string anchor;  // root class, property, or root category
  std::string label;
};

struct FilterSelection {
  std::string facet;
  std::vector<rdf::Term> values;
};

struct FacetState {
  std::vector<FilterSelection> selections;
  std::vector<rdf::Term> results;  // sorted entity IRIs
  std::size_t step = 0;
};

enum class Origin { kDirect, kHierarchyExpanded };

struct FacetSuggestion {
  std::string facet;
  rdf::Term value;
  std::size_t count = 0;
  Origin origin = Origin::kDirect;
  std::string via;   // "parent" or "sibling" for expanded suggestions
  std::string from;  // class the hop started from
};

// Evaluates facet selections and proposes next filters over one immutable
// graph and ontology. The engine keeps pointers to both; they must outlive it.
class SearchEngine {
 public:
  SearchEngine(const rdf::Graph& graph, const align::Ontology& ontology, std::vector<FacetDefinition> facets,
               std::vector<std::string> label_predicates,
               enrich::CategoryPredicates category_predicates = {});

  const std::vector<FacetDefinition>& facets() const { return facets_; }
  const FacetDefinition* facet(std::string_view id) const;

  // Entities with at least one rdf:type, sorted.
  const std::vector<rdf::Term>& universe() const { return universe_; }

  // OR over the values of one selection, AND across selections. Two selections
  // on the same facet therefore intersect. Selections with no values are
  // ignored. Throws QueryError for an unknown facet id.
  std::vector<rdf::Term> evaluate(const std::vector<FilterSelection>& selections) const;

  FacetState state(std::vector<FilterSelection> selections, std::size_t step = 0) const;
  FacetState refine(const FacetState& current, FilterSelection selection) const;

  // Suggestions for the next step: directly attested values with exact
  // counts plus, for class facets, parents and siblings of attested or
  // selected classes. Zero counts and already selected values are never
  // emitted. Ordered by count descending, facet id, value. A nonempty
  // keyword restricts direct suggestions to values whose text contains it.
  std::vector<FacetSuggestion> suggest(const FacetState& state, std::string_view keyword = {}) const;

  // Whether entity `e` matches `value` under facet `f`.
  bool matches(const FacetDefinition& f, const rdf::Term& e, const rdf::Term& value) const;

  // Display label of a term: first listed label predicate that has one,
  // preferring English, then untagged, then other tags.
  std::string label(const rdf::Term& t) const;
  std::vector<std::string> types(const rdf::Term& entity) const;

  const std::set<std::string>& class_ancestors(const std::string& cls) const;

 private:
  const std::set<std::string>& closure(const std::string& cls) const;
  bool in_domain(const FacetDefinition& f, const std::string& value) const;

  const rdf::Graph* graph_;
  const align::Ontology* ontology_;
  std::vector<FacetDefinition> facets_;
  std::vector<std::string> label_predicates_;
  enrich::CategoryPredicates category_predicates_;

  std::vector<rdf::Term> universe_;
  std::map<std::string, std::set<std::string>> parents_;   // class -> direct superclasses
  std::map<std::string, std::set<std::string>> children_;  // class -> direct subclasses
  std::map<std::string, std::set<std::string>> ancestors_;
  std::map<rdf::Term, std::set<std::string>> entity_classes_;  // direct types plus ancestors
  std::map<rdf::Term, std::set<std::string>> entity_categories_;
  std::map<std::string, std::set<std::string>> category_ancestors_;
};

}  // namespace semlift::search
