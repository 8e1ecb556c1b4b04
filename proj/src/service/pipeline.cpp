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

#include "semlift/service/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "semlift/align/match.hpp"
#include "semlift/lift/schema.hpp"
#include "semlift/lift/xml.hpp"
#include "semlift/rdf/ntriples.hpp"
#include "semlift/rdf/turtle.hpp"
#include "semlift/service/snapshot.hpp"

namespace semlift::service {
namespace fs = std::filesystem;
namespace {

const std::map<std::string, std::string> kProducer = {
    {artifact::kOntology, "lift-schema"}, {artifact::kData, "convert"},     {artifact::kMappings, "align"},
    {artifact::kAligned, "apply"},        {artifact::kEnriched, "enrich"}, {artifact::kFinal, "index"},
};

void note(const Log& log, const std::string& line) {
  if (log) log(line);
}

}  // namespace

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("missing input file: " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string Artifacts::read(const std::string& name) const {
  const fs::path p = path(name);
  if (!fs::is_regular_file(p)) {
    auto it = kProducer.find(name);
    throw IoError("missing input file: " + p.string() +
                  (it == kProducer.end() ? std::string() : " (run '" + it->second + "' first)"));
  }
  return read_text(p);
}

void Artifacts::write(const std::string& name, const std::string& content) const {
  fs::create_directories(dir_);
  const fs::path p = path(name);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw IoError("cannot write " + p.string());
}

lift::LiftConfig lift_config(const PipelineConfig& c, const std::string& document_id) {
  return {c.lifting_namespace, c.instance_namespace, document_id};
}

lift::DerivedOntology lift_ontology(const PipelineConfig& c) {
  // The document id plays no part in lifting but must be set.
  return lift::lift_schema(lift::parse_schema(read_text(c.schema)), lift_config(c, "schema"));
}

rdf::Graph convert_documents(const PipelineConfig& c, const lift::DerivedOntology& ontology) {
  if (c.documents.empty()) throw ConfigError("no input documents");
  rdf::Graph out;
  for (const fs::path& d : c.documents) {
    out.merge(lift::convert_instance(lift::parse_document(read_text(d)), ontology,
                                     lift_config(c, d.stem().string())));
  }
  return out;
}

Ontologies load_ontologies(const PipelineConfig& c, const rdf::Graph& lifted) {
  Ontologies o;
  o.lifted = align::ontology_from_graph(lifted);
  rdf::Graph all = lifted;
  if (!c.experts.empty()) {
    o.experts = align::load_ontology(c.experts, c.import_dirs);
    all.merge(o.experts.graph);
  }
  o.combined = align::ontology_from_graph(all);
  return o;
}

std::vector<align::MappingRule> align_rules(const PipelineConfig& c, const Ontologies& o, const rdf::Graph& data) {
  std::vector<align::MappingRule> rules;
  std::set<std::tuple<align::MappingKind, std::string, std::string>> stated;
  for (const fs::path& m : c.manual_mappings) {
    for (align::MappingRule& r : align::rules_from_graph(rdf::parse_turtle(read_text(m)))) {
      stated.emplace(r.kind, r.source, r.target);
      rules.push_back(std::move(r));
    }
  }
  if (c.experts.empty()) return rules;
  const align::IdentifierFacts source_facts = align::extract_facts(data, c.facts);
  const align::IdentifierFacts target_facts = align::extract_facts(o.experts.graph, c.facts);
  for (align::MappingRule& r : align::suggest_alignments({o.lifted, source_facts}, {o.experts, target_facts},
                                                         c.matcher)) {
    if (!stated.count({r.kind, r.source, r.target})) rules.push_back(std::move(r));
  }
  return rules;
}

align::ApplyResult apply_rules(const PipelineConfig& c, const Ontologies& o, const rdf::Graph& data,
                               const std::vector<align::MappingRule>& rules) {
  return align::apply_mappings(data, rules, c.threshold, {&o.lifted, &o.experts});
}

std::set<std::string> enrichment_targets(const PipelineConfig& c, const rdf::Graph& g) {
  const rdf::Term type = rdf::Term::iri(std::string(vocab::kRdfType));
  const std::set<std::string> classes(c.enrichment_targets.begin(), c.enrichment_targets.end());
  std::set<std::string> out;
  for (const rdf::Triple& t : g.match(std::nullopt, type, std::nullopt)) {
    if (!t.subject().is_iri() || !t.object().is_iri()) continue;
    const std::string& s = t.subject().as_iri().str();
    if (s.rfind(c.instance_namespace, 0) != 0) continue;
    if (classes.empty() || classes.count(t.object().as_iri().str())) out.insert(s);
  }
  return out;
}

enrich::EnrichmentResult enrich_graph(const PipelineConfig& c, const rdf::Graph& g) {
  if (c.sources.empty()) return {g, {}};
  return enrich::enrich(g, enrichment_targets(c, g), c.sources, {c.allow_live});
}

void step_lift_schema(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  lift::DerivedOntology o = lift_ontology(c);
  a.write(artifact::kOntology, rdf::write_turtle(o.to_graph(), o.prefixes()));
  a.write(artifact::kLiftReport, o.review_report());
  note(log, "lift-schema: " + std::to_string(o.classes.size()) + " classes, " +
                std::to_string(o.datatype_properties.size()) + " datatype properties, " +
                std::to_string(o.object_properties.size()) + " object properties");
}

void step_convert(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  rdf::Graph data = convert_documents(c, lift_ontology(c));
  a.write(artifact::kData, rdf::write_ntriples(data));
  note(log, "convert: " + std::to_string(c.documents.size()) + " documents, " + std::to_string(data.size()) +
                " triples");
}

void step_align(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  Ontologies o = load_ontologies(c, rdf::parse_turtle(a.read(artifact::kOntology)));
  auto rules = align_rules(c, o, rdf::parse_ntriples(a.read(artifact::kData)));
  a.write(artifact::kMappings, align::write_rules(rules));
  note(log, "align: " + std::to_string(rules.size()) + " rules");
}

void step_apply(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  Ontologies o = load_ontologies(c, rdf::parse_turtle(a.read(artifact::kOntology)));
  align::ApplyResult r = apply_rules(c, o, rdf::parse_ntriples(a.read(artifact::kData)),
                                     align::parse_rules(a.read(artifact::kMappings)));
  a.write(artifact::kAligned, rdf::write_ntriples(r.graph));
  a.write(artifact::kJustifications, align::write_justifications(r));
  for (const std::string& w : r.warnings) note(log, "apply: warning: " + w);
  note(log, "apply: " + std::to_string(r.log.size()) + " triples added");
}

void step_enrich(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  enrich::EnrichmentResult r = enrich_graph(c, rdf::parse_ntriples(a.read(artifact::kAligned)));
  a.write(artifact::kEnriched, rdf::write_ntriples(r.graph));
  a.write(artifact::kEnrichmentReport, r.report.to_tsv());
  note(log, "enrich: " + std::to_string(r.report.total_added()) + " triples added, " +
                std::to_string(r.report.skipped.size()) + " skipped");
}

void step_index(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  rdf::Graph final_graph = rdf::parse_ntriples(a.read(artifact::kEnriched));
  a.write(artifact::kFinal, rdf::write_ntriples(final_graph));
  auto snapshot = load_snapshot(c, a);
  a.write(artifact::kSnapshot, snapshot_summary(*snapshot));
  note(log, "index: " + std::to_string(snapshot->index.size()) + " lexical entries, snapshot " + snapshot->hash);
}

void run_pipeline(const PipelineConfig& c, const Artifacts& a, const Log& log) {
  step_lift_schema(c, a, log);
  step_convert(c, a, log);
  step_align(c, a, log);
  step_apply(c, a, log);
  step_enrich(c, a, log);
  step_index(c, a, log);
}

}  // namespace semlift::service
