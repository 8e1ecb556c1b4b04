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

#include <deque>
#include <map>

#include "semlift/align/mapping.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::align {
namespace {

using rdf::Term;
using rdf::Triple;
using Edges = std::map<Term, std::vector<std::pair<Term, std::size_t>>>;

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

bool is_mapping_predicate(const Term& p) {
  const std::string& v = p.as_iri().str();
  return v == vocab::kOwlSameAs || v == vocab::kSemliftMappingProvenance || v == vocab::kOwlEquivalentClass ||
         v == vocab::kRdfsSubClassOf || v == vocab::kOwlEquivalentProperty;
}

}  // namespace

std::string_view derivation_name(Derivation d) {
  switch (d) {
    case Derivation::kAxiom: return "axiom";
    case Derivation::kProvenance: return "provenance";
    case Derivation::kTypePropagation: return "type-propagation";
    case Derivation::kSameIndividual: return "same-individual";
    case Derivation::kEquivalentProperty: return "equivalent-property";
  }
  return "";
}

ApplyResult apply_mappings(const rdf::Graph& g, const std::vector<MappingRule>& rules, double threshold,
                           const std::vector<const Ontology*>& ontologies) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ValidationError("threshold outside [0, 1]: " + format_confidence(threshold));
  }
  ApplyResult result;
  result.graph = g;
  rdf::Graph& out = result.graph;

  auto known = [&](const std::string& v) {
    Term t = Term::iri(v);
    if (g.mentions(t)) return true;
    for (const Ontology* o : ontologies) {
      if (o->graph.mentions(t)) return true;
    }
    return false;
  };

  Edges class_edges, same, props;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const MappingRule& r = rules[i];
    r.validate();
    if (r.confidence < threshold) continue;
    const std::string* unknown = !known(r.source) ? &r.source : !known(r.target) ? &r.target : nullptr;
    if (unknown != nullptr) {
      result.warnings.push_back("rule " + std::to_string(i + 1) + " skipped (" + std::string(kind_name(r.kind)) +
                                " " + r.source + " " + r.target + "): unknown IRI " + *unknown);
      continue;
    }
    active.push_back(i);
    Term s = Term::iri(r.source), t = Term::iri(r.target);
    switch (r.kind) {
      case MappingKind::kSubClassOf:
        class_edges[s].emplace_back(t, i);
        break;
      case MappingKind::kEquivalentClass:
        class_edges[s].emplace_back(t, i);
        class_edges[t].emplace_back(s, i);
        break;
      case MappingKind::kSameIndividual:
        same[s].emplace_back(t, i);
        same[t].emplace_back(s, i);
        break;
      case MappingKind::kEquivalentProperty:
        props[s].emplace_back(t, i);
        props[t].emplace_back(s, i);
        break;
    }
  }

  std::deque<Triple> queue(g.begin(), g.end());
  auto add = [&](Triple t, Derivation d, std::size_t rule, std::optional<Triple> premise) {
    if (!out.insert(t)) return;
    result.log.push_back({t, d, rule, std::move(premise)});
    queue.push_back(std::move(t));
  };

  const Term provenance = iri(vocab::kSemliftMappingProvenance);
  for (std::size_t i : active) {
    const MappingRule& r = rules[i];
    add(Triple(Term::iri(r.source), iri(kind_predicate(r.kind)), Term::iri(r.target)), Derivation::kAxiom, i,
        std::nullopt);
    add(Triple(Term::iri(r.source), provenance, Term::literal(r.provenance)), Derivation::kProvenance, i,
        std::nullopt);
  }

  // Every derivation has a single premise, so processing each triple once
  // against the static rule set reaches the fixpoint.
  const Term type = iri(vocab::kRdfType);
  while (!queue.empty()) {
    Triple t = std::move(queue.front());
    queue.pop_front();
    if (t.predicate() == type) {
      if (auto it = class_edges.find(t.object()); it != class_edges.end()) {
        for (const auto& [d, i] : it->second) add(Triple(t.subject(), type, d), Derivation::kTypePropagation, i, t);
      }
    }
    if (!is_mapping_predicate(t.predicate())) {
      if (auto it = same.find(t.subject()); it != same.end()) {
        for (const auto& [b, i] : it->second) {
          add(Triple(b, t.predicate(), t.object()), Derivation::kSameIndividual, i, t);
        }
      }
    }
    if (auto it = props.find(t.predicate()); it != props.end()) {
      for (const auto& [q, i] : it->second) {
        add(Triple(t.subject(), q, t.object()), Derivation::kEquivalentProperty, i, t);
      }
    }
  }
  return result;
}

std::string write_justifications(const ApplyResult& result) {
  std::string out;
  for (const Justification& j : result.log) {
    out += std::string(derivation_name(j.derivation)) + "\t" + std::to_string(j.rule + 1) + "\t" +
           j.added.ntriples() + "\t" + (j.premise ? j.premise->ntriples() : "-") + "\n";
  }
  return out;
}

}  // namespace semlift::align
