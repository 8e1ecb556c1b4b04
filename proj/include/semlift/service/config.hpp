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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semlift/align/match.hpp"
#include "semlift/enrich/enrich.hpp"
#include "semlift/error.hpp"
#include "semlift/rdf/graph.hpp"
#include "semlift/search/facets.hpp"

namespace semlift::service {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct PipelineConfig {
  std::filesystem::path base_dir;  // relative paths in the file resolve against it
  std::filesystem::path output_dir;
  rdf::PrefixMap prefixes;         // CURIE expansion and Turtle output

  std::filesystem::path schema;
  std::vector<std::filesystem::path> documents;
  std::string lifting_namespace;
  std::string instance_namespace;

  std::vector<std::filesystem::path> experts;
  std::vector<std::filesystem::path> import_dirs;
  std::vector<std::filesystem::path> manual_mappings;
  double threshold = 0.8;
  align::FactPredicates facts;
  align::MatcherConfig matcher;

  std::vector<std::string> enrichment_targets;  // class IRIs
  bool allow_live = false;
  std::vector<enrich::EnrichmentSource> sources;
  enrich::CategoryPredicates categories;

  std::vector<std::string> label_predicates;
  std::vector<search::FacetDefinition> facets;

  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> ui_dir;
  bool admin_reload = false;

  // Referenced paths exist, namespaces and IRIs are absolute, threshold is in
  // [0, 1], sources and facets are well formed. Throws ConfigError.
  void validate() const;
};

// `base_dir` anchors relative paths. Throws ConfigError on malformed YAML,
// unknown keys or failed validation.
PipelineConfig parse_config(std::string_view yaml, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& file);

}  // namespace semlift::service
