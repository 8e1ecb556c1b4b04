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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semlift/error.hpp"
#include "semlift/rdf/graph.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::enrich {

class EnrichmentError : public Error {
 public:
  using Error::Error;
};

enum class SourceKind { kFixtureDirectory, kEndpoint };

struct EnrichmentSource {
  std::string id;
  SourceKind kind = SourceKind::kFixtureDirectory;
  // Fixture directory, or for endpoints a URL prefix the percent-encoded IRI
  // is appended to (empty: dereference the IRI itself).
  std::string location;
  std::vector<std::string> predicates;  // enabled predicate IRIs

  // Throws EnrichmentError for an empty id or predicate list, or a missing
  // fixture directory.
  void validate() const;
};

struct EntityReport {
  std::string entity;
  std::string source;
  std::vector<std::string> resolved;  // IRIs whose documents were merged
  std::size_t added = 0;              // newly inserted triples
  std::set<std::string> languages;    // language tags among kept literals
};

struct SkippedEntity {
  std::string entity;
  std::string source;
  std::string reason;
};

struct EnrichmentReport {
  std::vector<EntityReport> entities;
  std::vector<SkippedEntity> skipped;

  std::size_t total_added() const;
  // Tab-separated: "enriched source entity added languages resolved" and
  // "skipped source entity reason".
  std::string to_tsv() const;
};

struct EnrichmentResult {
  rdf::Graph graph;
  EnrichmentReport report;
};

// Retrieves the Turtle description of an IRI; nullopt when there is none.
class DocumentFetcher {
 public:
  virtual ~DocumentFetcher() = default;
  virtual std::optional<std::string> fetch(const std::string& iri) = 0;
};

// Fixture file name of an entity: percent-encoded IRI + ".ttl".
std::string fixture_filename(const std::string& iri);

std::unique_ptr<DocumentFetcher> make_fetcher(const EnrichmentSource& source);

struct EnrichOptions {
  bool allow_live = false;  // endpoint sources are rejected unless set
};

// For every source in order and every target in IRI order: resolve the
// target directly and through owl:sameAs aliases, fetch each description,
// keep triples whose predicate is enabled for the source, rewrite the
// described IRI to the target and insert. Triples describing other IRIs
// (for example category hierarchy statements) are kept as they are; triples
// with blank nodes are dropped. A target without any document is skipped;
// a malformed document skips the target for that source.
EnrichmentResult enrich(const rdf::Graph& g, const std::set<std::string>& targets,
                        const std::vector<EnrichmentSource>& sources, const EnrichOptions& options = {});

// Same, with explicit fetchers (one per source, same order).
EnrichmentResult enrich_with(const rdf::Graph& g, const std::set<std::string>& targets,
                             const std::vector<EnrichmentSource>& sources,
                             const std::vector<DocumentFetcher*>& fetchers);

struct CategoryPredicates {
  std::string subject{vocab::kDctermsSubject};
  std::string broader{vocab::kSkosBroader};
};

using Categories = std::map<std::string, std::set<std::string>>;

// Each entity with a subject triple maps to its direct categories and all
// their broader ancestors. Cycles in the broader relation are tolerated.
Categories categorize(const rdf::Graph& g, const CategoryPredicates& predicates = {});

// Categories of one entity (empty when it has none).
std::set<std::string> categories_of(const rdf::Graph& g, const std::string& entity,
                                    const CategoryPredicates& predicates = {});

}  // namespace semlift::enrich
