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

#include "semlift/service/snapshot.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include "json.hpp"

#include "semlift/rdf/ntriples.hpp"
#include "semlift/rdf/turtle.hpp"

namespace semlift::service {

SnapshotSettings snapshot_settings(const PipelineConfig& c) {
  return {c.label_predicates, c.facets, c.categories, c.prefixes};
}

std::string snapshot_hash(const rdf::Graph& graph, const rdf::Graph& ontology, const SnapshotSettings& s) {
  std::string input = rdf::write_ntriples(graph);
  input += "\n# ontology\n" + rdf::write_ntriples(ontology);
  input += "\n# facets\n";
  for (const search::FacetDefinition& f : s.facets) {
    input += f.id + '\t' + std::string(search::facet_kind_name(f.kind)) + '\t' + f.anchor + '\t' + f.label + '\n';
  }
  input += "\n# labels\n";
  for (const std::string& p : s.label_predicates) input += p + '\n';

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(input.data(), input.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string build_time() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::shared_ptr<const Snapshot> build_snapshot(rdf::Graph graph, align::Ontology ontology, const SnapshotSettings& s) {
  auto snap = std::make_shared<Snapshot>();
  snap->graph = std::move(graph);
  snap->ontology = std::move(ontology);
  snap->label_predicates = s.label_predicates;
  snap->facets = s.facets;
  snap->categories = s.categories;
  snap->prefixes = s.prefixes;
  snap->index = search::AutocompleteIndex::build(snap->graph, s.label_predicates);
  snap->engine = std::make_unique<search::SearchEngine>(snap->graph, snap->ontology, s.facets, s.label_predicates,
                                                        s.categories);
  snap->built = build_time();
  snap->hash = snapshot_hash(snap->graph, snap->ontology.graph, s);
  return snap;
}

std::shared_ptr<const Snapshot> load_snapshot(const PipelineConfig& c, const Artifacts& a) {
  rdf::Graph graph = rdf::parse_ntriples(a.read(artifact::kFinal));
  Ontologies o = load_ontologies(c, rdf::parse_turtle(a.read(artifact::kOntology)));
  return build_snapshot(std::move(graph), std::move(o.combined), snapshot_settings(c));
}

std::string snapshot_summary(const Snapshot& s) {
  nlohmann::json facets = nlohmann::json::array();
  for (const search::FacetDefinition& f : s.facets) {
    facets.push_back({{"id", f.id}, {"kind", search::facet_kind_name(f.kind)}, {"anchor", f.anchor}, {"label", f.label}});
  }
  nlohmann::json j = {
      {"hash", s.hash},
      {"built", s.built},
      {"triples", s.graph.size()},
      {"ontology_triples", s.ontology.graph.size()},
      {"entities", s.engine->universe().size()},
      {"lexical_entries", s.index.size()},
      {"facets", facets},
      {"label_predicates", s.label_predicates},
  };
  return j.dump(2) + "\n";
}

}  // namespace semlift::service
