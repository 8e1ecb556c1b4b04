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

#include "semlift/align/match.hpp"

#include <algorithm>
#include <set>

#include "semlift/text/normalize.hpp"

namespace semlift::align {
namespace {

enum class EntityKind { kClass, kProperty, kIndividual };

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string strip_whitespace(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  }
  return out;
}

EntityKind kind_of(const Ontology& o, const std::string& iri) {
  if (o.is_class(iri)) return EntityKind::kClass;
  if (o.is_property(iri)) return EntityKind::kProperty;
  return EntityKind::kIndividual;
}

MappingKind rule_kind(EntityKind k) {
  switch (k) {
    case EntityKind::kClass: return MappingKind::kEquivalentClass;
    case EntityKind::kProperty: return MappingKind::kEquivalentProperty;
    case EntityKind::kIndividual: return MappingKind::kSameIndividual;
  }
  return MappingKind::kSameIndividual;
}

// Facts plus the labels declared in the ontology itself.
IdentifierFacts effective_facts(const AlignmentInput& in) {
  IdentifierFacts facts = in.facts;
  for (const auto& [iri, decl] : in.ontology.classes) {
    if (decl.labels.empty()) continue;
    auto& names = facts[iri].names;
    names.insert(names.end(), decl.labels.begin(), decl.labels.end());
    sort_unique(names);
  }
  for (const auto& [iri, decl] : in.ontology.properties) {
    if (decl.labels.empty()) continue;
    auto& names = facts[iri].names;
    names.insert(names.end(), decl.labels.begin(), decl.labels.end());
    sort_unique(names);
  }
  return facts;
}

struct TargetIndex {
  std::map<ExternalId, std::vector<std::string>> ids;
  std::map<std::string, std::vector<std::string>> formulas;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> labels;  // norm -> (iri, lang)
};

TargetIndex index_targets(const IdentifierFacts& facts) {
  TargetIndex idx;
  for (const auto& [iri, f] : facts) {
    for (const ExternalId& id : f.ids) idx.ids[id].push_back(iri);
    for (const std::string& formula : f.formulas) {
      std::string key = strip_whitespace(formula);
      if (!key.empty()) idx.formulas[key].push_back(iri);
    }
    for (const Label& l : f.names) {
      std::string key = text::normalize(l.text);
      if (!key.empty()) idx.labels[key].emplace_back(iri, l.language);
    }
  }
  return idx;
}

}  // namespace

IdentifierFacts extract_facts(const rdf::Graph& g, const FactPredicates& predicates) {
  std::set<std::string> names(predicates.names.begin(), predicates.names.end());
  std::set<std::string> formulas(predicates.formulas.begin(), predicates.formulas.end());
  const std::string& ns = predicates.identifier_namespace;

  IdentifierFacts facts;
  for (const rdf::Triple& t : g) {
    if (!t.subject().is_iri() || !t.object().is_literal()) continue;
    const std::string& p = t.predicate().as_iri().str();
    const rdf::Literal& lit = t.object().as_literal();
    const std::string& s = t.subject().as_iri().str();
    if (names.count(p)) facts[s].names.push_back({lit.lexical(), lit.language().value_or("")});
    if (formulas.count(p)) facts[s].formulas.push_back(lit.lexical());
    if (auto it = predicates.identifiers.find(p); it != predicates.identifiers.end()) {
      facts[s].ids.push_back({it->second, lit.lexical()});
    } else if (!ns.empty() && p.size() > ns.size() && p.compare(0, ns.size(), ns) == 0) {
      facts[s].ids.push_back({p.substr(ns.size()), lit.lexical()});
    }
  }
  for (auto& [iri, f] : facts) {
    sort_unique(f.names);
    sort_unique(f.formulas);
    sort_unique(f.ids);
  }
  return facts;
}

std::vector<MappingRule> suggest_alignments(const AlignmentInput& a, const AlignmentInput& b,
                                            const MatcherConfig& config) {
  IdentifierFacts source_facts = effective_facts(a);
  IdentifierFacts target_facts = effective_facts(b);
  TargetIndex idx = index_targets(target_facts);

  std::vector<MappingRule> rules;
  for (const auto& [source, f] : source_facts) {
    EntityKind kind = kind_of(a.ontology, source);
    std::map<std::string, MappingRule> best;  // by target
    auto offer = [&](const std::string& target, double confidence, const char* matcher) {
      if (target == source || kind_of(b.ontology, target) != kind) return;
      auto it = best.find(target);
      if (it != best.end() && it->second.confidence >= confidence) return;
      best[target] = MappingRule{rule_kind(kind), source, target, confidence, matcher};
    };

    for (const ExternalId& id : f.ids) {
      if (auto it = idx.ids.find(id); it != idx.ids.end()) {
        for (const std::string& t : it->second) offer(t, config.external_id, "external-id");
      }
    }
    for (const std::string& formula : f.formulas) {
      if (auto it = idx.formulas.find(strip_whitespace(formula)); it != idx.formulas.end()) {
        for (const std::string& t : it->second) offer(t, config.formula, "formula");
      }
    }
    for (const Label& l : f.names) {
      auto it = idx.labels.find(text::normalize(l.text));
      if (it == idx.labels.end()) continue;
      for (const auto& [t, language] : it->second) {
        bool compatible = l.language.empty() || language.empty() || l.language == language;
        if (compatible) {
          offer(t, config.label, "label");
        } else {
          offer(t, config.label_multilingual, "label-multilingual");
        }
      }
    }
    for (auto& [target, rule] : best) rules.push_back(std::move(rule));
  }
  std::stable_sort(rules.begin(), rules.end(), [](const MappingRule& x, const MappingRule& y) {
    if (x.confidence != y.confidence) return x.confidence > y.confidence;
    if (x.source != y.source) return x.source < y.source;
    return x.target < y.target;
  });
  return rules;
}

}  // namespace semlift::align
