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

#include "semlift/search/facets.hpp"

#include <algorithm>
#include <tuple>

#include "semlift/rdf/vocab.hpp"
#include "semlift/text/normalize.hpp"

namespace semlift::search {
namespace {

using rdf::Term;

const std::set<std::string> kEmpty;

Term type_predicate() { return Term::iri(std::string(vocab::kRdfType)); }

// Reflexive-free transitive closure of `edges` from `start`.
std::set<std::string> reach(const std::map<std::string, std::set<std::string>>& edges, const std::string& start) {
  std::set<std::string> seen;
  std::vector<std::string> todo{start};
  while (!todo.empty()) {
    std::string x = std::move(todo.back());
    todo.pop_back();
    auto it = edges.find(x);
    if (it == edges.end()) continue;
    for (const std::string& y : it->second) {
      if (y != start && seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

std::string_view facet_kind_name(FacetKind k) {
  switch (k) {
    case FacetKind::kClassHierarchy: return "class-hierarchy";
    case FacetKind::kPropertyValue: return "property-value";
    case FacetKind::kCategory: return "category";
  }
  return "";
}

FacetKind facet_kind_from_name(std::string_view name) {
  for (FacetKind k : {FacetKind::kClassHierarchy, FacetKind::kPropertyValue, FacetKind::kCategory}) {
    if (facet_kind_name(k) == name) return k;
  }
  throw QueryError("unknown facet kind '" + std::string(name) + "'");
}

SearchEngine::SearchEngine(const rdf::Graph& graph, const align::Ontology& ontology,
                           std::vector<FacetDefinition> facets, std::vector<std::string> label_predicates,
                           enrich::CategoryPredicates category_predicates)
    : graph_(&graph),
      ontology_(&ontology),
      facets_(std::move(facets)),
      label_predicates_(std::move(label_predicates)),
      category_predicates_(std::move(category_predicates)) {
  std::set<std::string> ids;
  for (const FacetDefinition& f : facets_) {
    if (f.id.empty()) throw QueryError("facet without an id");
    if (!ids.insert(f.id).second) throw QueryError("duplicate facet id '" + f.id + "'");
    if (!rdf::Iri::is_valid(f.anchor)) throw QueryError("facet '" + f.id + "': invalid anchor IRI");
    Term anchor = Term::iri(f.anchor);
    if (!graph.mentions(anchor) && !ontology.graph.mentions(anchor) && !ontology.is_class(f.anchor)) {
      throw QueryError("facet '" + f.id + "': anchor " + f.anchor + " not found in graph or ontology");
    }
  }

  for (const auto& [sub, super] : ontology.subclass_of) parents_[sub].insert(super);
  for (const rdf::Triple& t :
       graph.match(std::nullopt, Term::iri(std::string(vocab::kRdfsSubClassOf)), std::nullopt)) {
    if (t.subject().is_iri() && t.object().is_iri()) {
      parents_[t.subject().as_iri().str()].insert(t.object().as_iri().str());
    }
  }
  for (const auto& [sub, supers] : parents_) {
    for (const std::string& s : supers) children_[s].insert(sub);
  }

  const Term broader = Term::iri(category_predicates_.broader);
  std::map<std::string, std::set<std::string>> broader_edges;
  for (const rdf::Triple& t : graph.match(std::nullopt, broader, std::nullopt)) {
    if (t.subject().is_iri() && t.object().is_iri()) {
      broader_edges[t.subject().as_iri().str()].insert(t.object().as_iri().str());
    }
  }

  std::set<Term> universe;
  for (const rdf::Triple& t : graph.match(std::nullopt, type_predicate(), std::nullopt)) {
    if (t.subject().is_iri()) universe.insert(t.subject());
  }
  universe_.assign(universe.begin(), universe.end());
  for (const Term& e : universe_) {
    std::set<std::string>& classes = entity_classes_[e];
    for (const Term& d : graph.objects(e, type_predicate())) {
      if (!d.is_iri()) continue;
      classes.insert(d.as_iri().str());
      const auto& up = closure(d.as_iri().str());
      classes.insert(up.begin(), up.end());
    }
    std::set<std::string> cats = enrich::categories_of(graph, e.as_iri().str(), category_predicates_);
    for (const std::string& c : cats) {
      if (!category_ancestors_.count(c)) category_ancestors_[c] = reach(broader_edges, c);
    }
    entity_categories_[e] = std::move(cats);
  }
  for (const FacetDefinition& f : facets_) {
    if (f.kind == FacetKind::kCategory && !category_ancestors_.count(f.anchor)) {
      category_ancestors_[f.anchor] = reach(broader_edges, f.anchor);
    }
  }
}

const std::set<std::string>& SearchEngine::closure(const std::string& cls) const {
  auto it = ancestors_.find(cls);
  if (it != ancestors_.end()) return it->second;
  // Only called during construction, before the engine is shared.
  auto& cache = const_cast<std::map<std::string, std::set<std::string>>&>(ancestors_);
  return cache.emplace(cls, reach(parents_, cls)).first->second;
}

const std::set<std::string>& SearchEngine::class_ancestors(const std::string& cls) const {
  auto it = ancestors_.find(cls);
  return it == ancestors_.end() ? kEmpty : it->second;
}

const FacetDefinition* SearchEngine::facet(std::string_view id) const {
  for (const FacetDefinition& f : facets_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

bool SearchEngine::in_domain(const FacetDefinition& f, const std::string& value) const {
  if (value == f.anchor) return false;
  switch (f.kind) {
    case FacetKind::kClassHierarchy: {
      auto it = ancestors_.find(value);
      return it != ancestors_.end() ? it->second.count(f.anchor) != 0 : reach(parents_, value).count(f.anchor) != 0;
    }
    case FacetKind::kCategory: {
      auto it = category_ancestors_.find(value);
      return it != category_ancestors_.end() && it->second.count(f.anchor) != 0;
    }
    case FacetKind::kPropertyValue:
      return true;
  }
  return false;
}

bool SearchEngine::matches(const FacetDefinition& f, const Term& e, const Term& value) const {
  switch (f.kind) {
    case FacetKind::kClassHierarchy: {
      if (!value.is_iri()) return false;
      auto it = entity_classes_.find(e);
      return it != entity_classes_.end() && it->second.count(value.as_iri().str()) != 0;
    }
    case FacetKind::kPropertyValue:
      return graph_->contains(rdf::Triple(e, Term::iri(f.anchor), value));
    case FacetKind::kCategory: {
      if (!value.is_iri()) return false;
      auto it = entity_categories_.find(e);
      return it != entity_categories_.end() && it->second.count(value.as_iri().str()) != 0;
    }
  }
  return false;
}

std::vector<Term> SearchEngine::evaluate(const std::vector<FilterSelection>& selections) const {
  std::vector<std::pair<const FacetDefinition*, const std::vector<Term>*>> conjuncts;
  for (const FilterSelection& s : selections) {
    const FacetDefinition* f = facet(s.facet);
    if (f == nullptr) throw QueryError("unknown facet '" + s.facet + "'");
    if (!s.values.empty()) conjuncts.emplace_back(f, &s.values);
  }
  std::vector<Term> out;
  for (const Term& e : universe_) {
    bool keep = std::all_of(conjuncts.begin(), conjuncts.end(), [&](const auto& c) {
      return std::any_of(c.second->begin(), c.second->end(), [&](const Term& v) { return matches(*c.first, e, v); });
    });
    if (keep) out.push_back(e);
  }
  return out;
}

FacetState SearchEngine::state(std::vector<FilterSelection> selections, std::size_t step) const {
  FacetState s;
  s.results = evaluate(selections);
  s.selections = std::move(selections);
  s.step = step;
  return s;
}

FacetState SearchEngine::refine(const FacetState& current, FilterSelection selection) const {
  std::vector<FilterSelection> next = current.selections;
  next.push_back(std::move(selection));
  return state(std::move(next), current.step + 1);
}

std::string SearchEngine::label(const Term& t) const {
  if (t.is_literal()) return t.as_literal().lexical();
  if (t.is_blank()) return "_:" + t.as_blank().label();
  for (const std::string& p : label_predicates_) {
    std::vector<Term> found = graph_->objects(t, Term::iri(p));
    std::vector<Term> more = ontology_->graph.objects(t, Term::iri(p));
    found.insert(found.end(), more.begin(), more.end());
    const rdf::Literal* best = nullptr;
    auto rank = [](const rdf::Literal& l) {
      const std::string lang = l.language().value_or("");
      return std::make_tuple(lang == "en" ? 0 : lang.empty() ? 1 : 2, lang, l.lexical());
    };
    for (const Term& o : found) {
      if (!o.is_literal()) continue;
      if (best == nullptr || rank(o.as_literal()) < rank(*best)) best = &o.as_literal();
    }
    if (best != nullptr) return best->lexical();
  }
  return t.as_iri().str();
}

std::vector<std::string> SearchEngine::types(const Term& entity) const {
  std::vector<std::string> out;
  for (const Term& d : graph_->objects(entity, type_predicate())) {
    if (d.is_iri()) out.push_back(d.as_iri().str());
  }
  return out;
}

std::vector<FacetSuggestion> SearchEngine::suggest(const FacetState& state, std::string_view keyword) const {
  const std::string needle = text::normalize(keyword);
  auto text_matches = [&](const Term& v) {
    if (needle.empty()) return true;
    std::vector<std::string> texts{v.value()};
    for (const std::string& p : label_predicates_) {
      for (const rdf::Graph* g : {graph_, &ontology_->graph}) {
        for (const Term& o : g->objects(v, Term::iri(p))) {
          if (o.is_literal()) texts.push_back(o.as_literal().lexical());
        }
      }
    }
    for (const std::string& s : texts) {
      if (text::normalize(s).find(needle) != std::string::npos) return true;
    }
    return false;
  };

  std::vector<FacetSuggestion> out;
  for (const FacetDefinition& f : facets_) {
    std::set<Term> selected;
    for (const FilterSelection& s : state.selections) {
      if (s.facet == f.id) selected.insert(s.values.begin(), s.values.end());
    }
    auto count = [&](const Term& v) {
      std::size_t n = 0;
      for (const Term& e : state.results) n += matches(f, e, v) ? 1 : 0;
      return n;
    };

    std::set<Term> attested;
    for (const Term& e : state.results) {
      switch (f.kind) {
        case FacetKind::kClassHierarchy:
          for (const Term& d : graph_->objects(e, type_predicate())) {
            if (d.is_iri() && in_domain(f, d.as_iri().str())) attested.insert(d);
          }
          break;
        case FacetKind::kPropertyValue:
          for (const Term& v : graph_->objects(e, Term::iri(f.anchor))) attested.insert(v);
          break;
        case FacetKind::kCategory:
          for (const std::string& c : entity_categories_.at(e)) {
            if (in_domain(f, c)) attested.insert(Term::iri(c));
          }
          break;
      }
    }

    std::set<Term> emitted;
    std::set<std::string> seeds;
    for (const Term& v : attested) {
      if (!text_matches(v)) continue;
      if (v.is_iri()) seeds.insert(v.as_iri().str());
      if (selected.count(v)) continue;
      std::size_t n = count(v);
      if (n == 0) continue;
      out.push_back({f.id, v, n, Origin::kDirect, "", ""});
      emitted.insert(v);
    }
    if (f.kind != FacetKind::kClassHierarchy) continue;

    for (const Term& v : selected) {
      if (v.is_iri()) seeds.insert(v.as_iri().str());
    }
    std::map<std::string, std::pair<std::string, std::string>> relatives;  // value -> (via, from)
    auto offer = [&](const std::string& value, const char* via, const std::string& from) {
      auto it = relatives.find(value);
      if (it == relatives.end() || (std::string_view(via) == "parent" && it->second.first == "sibling")) {
        relatives[value] = {via, from};
      }
    };
    for (const std::string& c : seeds) {
      auto p = parents_.find(c);
      if (p == parents_.end()) continue;
      for (const std::string& parent : p->second) {
        if (in_domain(f, parent)) offer(parent, "parent", c);
        auto kids = children_.find(parent);
        if (kids == children_.end()) continue;
        for (const std::string& sibling : kids->second) {
          if (sibling != c && in_domain(f, sibling)) offer(sibling, "sibling", c);
        }
      }
    }
    for (const auto& [value, hop] : relatives) {
      Term v = Term::iri(value);
      if (emitted.count(v) || selected.count(v)) continue;
      std::size_t n = count(v);
      if (n == 0) continue;
      out.push_back({f.id, v, n, Origin::kHierarchyExpanded, hop.first, hop.second});
    }
  }
  std::sort(out.begin(), out.end(), [](const FacetSuggestion& a, const FacetSuggestion& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.facet != b.facet) return a.facet < b.facet;
    return a.value < b.value;
  });
  return out;
}

}  // namespace semlift::search
