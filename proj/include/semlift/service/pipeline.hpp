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
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "semlift/align/mapping.hpp"
#include "semlift/align/ontology.hpp"
#include "semlift/enrich/enrich.hpp"
#include "semlift/lift/lift.hpp"
#include "semlift/service/config.hpp"

namespace semlift::service {

// Missing or unreadable input file.
class IoError : public Error {
 public:
  using Error::Error;
};

namespace artifact {
inline constexpr const char* kOntology = "ontology.ttl";
inline constexpr const char* kLiftReport = "lift-report.txt";
inline constexpr const char* kData = "data.nt";
inline constexpr const char* kMappings = "mappings.tsv";
inline constexpr const char* kAligned = "aligned.nt";
inline constexpr const char* kJustifications = "justifications.tsv";
inline constexpr const char* kEnriched = "enriched.nt";
inline constexpr const char* kEnrichmentReport = "enrichment-report.tsv";
inline constexpr const char* kFinal = "final.nt";
inline constexpr const char* kSnapshot = "snapshot.json";
}  // namespace artifact

std::string read_text(const std::filesystem::path& p);

// Flat-file artifacts of one pipeline run.
class Artifacts {
 public:
  explicit Artifacts(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path(const std::string& name) const { return dir_ / name; }
  // Throws IoError naming the step that produces a missing artifact.
  std::string read(const std::string& name) const;
  void write(const std::string& name, const std::string& content) const;

 private:
  std::filesystem::path dir_;
};

using Log = std::function<void(const std::string&)>;

lift::LiftConfig lift_config(const PipelineConfig& c, const std::string& document_id = {});
lift::DerivedOntology lift_ontology(const PipelineConfig& c);
// Document ids are the file stems. Throws ConfigError("no input documents").
rdf::Graph convert_documents(const PipelineConfig& c, const lift::DerivedOntology& ontology);

struct Ontologies {
  align::Ontology lifted;
  align::Ontology experts;   // empty when none are configured
  align::Ontology combined;  // lifted and expert declarations together
};
Ontologies load_ontologies(const PipelineConfig& c, const rdf::Graph& lifted);

// Manual rules in file order, then matcher suggestions not already stated
// manually.
std::vector<align::MappingRule> align_rules(const PipelineConfig& c, const Ontologies& o, const rdf::Graph& data);
align::ApplyResult apply_rules(const PipelineConfig& c, const Ontologies& o, const rdf::Graph& data,
                               const std::vector<align::MappingRule>& rules);

// IRI subjects in the instance namespace typed with a configured target
// class (any type when none is configured).
std::set<std::string> enrichment_targets(const PipelineConfig& c, const rdf::Graph& g);
enrich::EnrichmentResult enrich_graph(const PipelineConfig& c, const rdf::Graph& g);

// CLI steps: read the previous artifacts, write their own.
void step_lift_schema(const PipelineConfig& c, const Artifacts& a, const Log& log);
void step_convert(const PipelineConfig& c, const Artifacts& a, const Log& log);
void step_align(const PipelineConfig& c, const Artifacts& a, const Log& log);
void step_apply(const PipelineConfig& c, const Artifacts& a, const Log& log);
void step_enrich(const PipelineConfig& c, const Artifacts& a, const Log& log);
void step_index(const PipelineConfig& c, const Artifacts& a, const Log& log);
void run_pipeline(const PipelineConfig& c, const Artifacts& a, const Log& log);

}  // namespace semlift::service
