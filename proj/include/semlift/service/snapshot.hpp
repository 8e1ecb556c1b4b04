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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "semlift/align/ontology.hpp"
#include "semlift/rdf/graph.hpp"
#include "semlift/search/autocomplete.hpp"
#include "semlift/search/facets.hpp"
#include "semlift/service/config.hpp"
#include "semlift/service/pipeline.hpp"

namespace semlift::service {

// Immutable graph plus the indexes built from it. Shared read-only between
// request handlers.
struct Snapshot {
  rdf::Graph graph;
  align::Ontology ontology;
  std::vector<std::string> label_predicates;
  std::vector<search::FacetDefinition> facets;
  enrich::CategoryPredicates categories;
  rdf::PrefixMap prefixes;
  search::AutocompleteIndex index;
  std::unique_ptr<search::SearchEngine> engine;  // refers to graph and ontology above
  std::string built;                             // UTC, ISO 8601
  std::string hash;                              // hex SHA-256

  Snapshot() = default;
  Snapshot(const Snapshot&) = delete;
  Snapshot& operator=(const Snapshot&) = delete;
};

struct SnapshotSettings {
  std::vector<std::string> label_predicates;
  std::vector<search::FacetDefinition> facets;
  enrich::CategoryPredicates categories;
  rdf::PrefixMap prefixes;
};

SnapshotSettings snapshot_settings(const PipelineConfig& c);

// SHA-256 over the graph and ontology N-Triples, facet definitions and
// label predicates. The build time is not part of it.
std::string snapshot_hash(const rdf::Graph& graph, const rdf::Graph& ontology, const SnapshotSettings& s);

std::shared_ptr<const Snapshot> build_snapshot(rdf::Graph graph, align::Ontology ontology, const SnapshotSettings& s);

// Rebuilds from final.nt and the ontologies named by the config.
std::shared_ptr<const Snapshot> load_snapshot(const PipelineConfig& c, const Artifacts& a);

// Summary written as snapshot.json.
std::string snapshot_summary(const Snapshot& s);

// Current build time, or SOURCE_DATE_EPOCH when set.
std::string build_time();

// Holder whose swap is atomic for readers: each reader keeps the snapshot it
// obtained until it drops the pointer.
class SnapshotStore {
 public:
  explicit SnapshotStore(std::shared_ptr<const Snapshot> s) : current_(std::move(s)) {}
  std::shared_ptr<const Snapshot> get() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return current_;
  }
  void set(std::shared_ptr<const Snapshot> s) {
    std::lock_guard<std::mutex> lock(mutex_);
    current_ = std::move(s);
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace semlift::service
