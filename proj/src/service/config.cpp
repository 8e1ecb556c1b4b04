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

#include "semlift/service/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "semlift/rdf/term.hpp"

namespace semlift::service {
namespace fs = std::filesystem;
namespace {

const rdf::PrefixMap kDefaultPrefixes = {
    {"dcterms", std::string(vocab::kDcterms)}, {"owl", std::string(vocab::kOwl)},
    {"rdf", std::string(vocab::kRdf)},         {"rdfs", std::string(vocab::kRdfs)},
    {"skos", std::string(vocab::kSkos)},       {"xsd", std::string(vocab::kXsd)},
};

void check_keys(const YAML::Node& node, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) throw ConfigError(where + ": expected a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

class Reader {
 public:
  Reader(fs::path base, rdf::PrefixMap prefixes) : base_(std::move(base)), prefixes_(std::move(prefixes)) {}

  std::string iri(const YAML::Node& node, const std::string& where) const {
    std::string v = scalar(node, where);
    auto colon = v.find(':');
    if (colon != std::string::npos && v.compare(colon, 3, "://") != 0) {
      auto it = prefixes_.find(v.substr(0, colon));
      if (it != prefixes_.end()) v = it->second + v.substr(colon + 1);
    }
    if (!rdf::Iri::is_valid(v)) throw ConfigError(where + ": not an absolute IRI: " + v);
    return v;
  }

  std::vector<std::string> iris(const YAML::Node& node, const std::string& where) const {
    std::vector<std::string> out;
    for (const YAML::Node& n : sequence(node, where)) out.push_back(iri(n, where));
    return out;
  }

  fs::path path(const YAML::Node& node, const std::string& where) const {
    fs::path p(scalar(node, where));
    return p.is_absolute() ? p : (base_ / p).lexically_normal();
  }

  std::vector<fs::path> paths(const YAML::Node& node, const std::string& where) const {
    std::vector<fs::path> out;
    for (const YAML::Node& n : sequence(node, where)) out.push_back(path(n, where));
    return out;
  }

  static std::string scalar(const YAML::Node& node, const std::string& where) {
    if (!node.IsScalar()) throw ConfigError(where + ": expected a scalar");
    return node.as<std::string>();
  }

  static std::vector<YAML::Node> sequence(const YAML::Node& node, const std::string& where) {
    if (!node || node.IsNull()) return {};
    if (!node.IsSequence()) throw ConfigError(where + ": expected a list");
    return {node.begin(), node.end()};
  }

  template <typename T>
  static T value(const YAML::Node& node, const std::string& where) {
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where + ": invalid value '" + scalar(node, where) + "'");
    }
  }

 private:
  fs::path base_;
  rdf::PrefixMap prefixes_;
};

void require_file(const fs::path& p, const std::string& what) {
  if (!fs::is_regular_file(p)) throw ConfigError(what + " not found: " + p.string());
}

void require_dir(const fs::path& p, const std::string& what) {
  if (!fs::is_directory(p)) throw ConfigError(what + " not found: " + p.string());
}

void require_namespace(const std::string& ns, const std::string& what) {
  if (ns.empty() || !rdf::Iri::is_valid(ns) || (ns.back() != '/' && ns.back() != '#')) {
    throw ConfigError(what + " must be an absolute IRI ending in '/' or '#': " + ns);
  }
}

}  // namespace

void PipelineConfig::validate() const {
  require_file(schema, "lift.schema");
  for (const fs::path& d : documents) require_file(d, "lift.documents entry");
  require_namespace(lifting_namespace, "lift.lifting_namespace");
  require_namespace(instance_namespace, "lift.instance_namespace");
  for (const fs::path& e : experts) require_file(e, "align.experts entry");
  for (const fs::path& d : import_dirs) require_dir(d, "align.import_dirs entry");
  for (const fs::path& m : manual_mappings) require_file(m, "align.manual entry");
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ConfigError("align.threshold must be in [0, 1]");
  std::set<std::string> ids;
  for (const enrich::EnrichmentSource& s : sources) {
    if (!ids.insert(s.id).second) throw ConfigError("enrichment: duplicate source id '" + s.id + "'");
    try {
      s.validate();
    } catch (const enrich::EnrichmentError& e) {
      throw ConfigError(std::string("enrichment source: ") + e.what());
    }
  }
  ids.clear();
  for (const search::FacetDefinition& f : facets) {
    if (f.id.empty()) throw ConfigError("search.facets: facet without an id");
    if (!ids.insert(f.id).second) throw ConfigError("search.facets: duplicate id '" + f.id + "'");
  }
  if (port < 0 || port > 65535) throw ConfigError("service.port out of range");
  if (ui_dir) require_dir(*ui_dir, "service.ui_dir");
}

PipelineConfig parse_config(std::string_view yaml, const fs::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line + 1), static_cast<std::size_t>(e.mark.column + 1), "");
  }
  if (!root || root.IsNull()) throw ConfigError("empty configuration");
  check_keys(root, "config", {"output_dir", "prefixes", "lift", "align", "enrichment", "search", "service"});

  PipelineConfig c;
  c.base_dir = base_dir;
  c.prefixes = kDefaultPrefixes;
  Reader plain(base_dir, {});
  if (const YAML::Node p = root["prefixes"]) {
    if (!p.IsMap()) throw ConfigError("prefixes: expected a mapping");
    for (const auto& kv : p) c.prefixes[kv.first.as<std::string>()] = plain.iri(kv.second, "prefixes");
  }
  Reader r(base_dir, c.prefixes);
  c.output_dir = root["output_dir"] ? r.path(root["output_dir"], "output_dir") : base_dir / "out";

  const YAML::Node lift = root["lift"];
  if (!lift) throw ConfigError("config: missing section 'lift'");
  check_keys(lift, "lift", {"schema", "documents", "lifting_namespace", "instance_namespace"});
  if (!lift["schema"]) throw ConfigError("lift: missing key 'schema'");
  c.schema = r.path(lift["schema"], "lift.schema");
  c.documents = r.paths(lift["documents"], "lift.documents");
  if (lift["lifting_namespace"]) c.lifting_namespace = Reader::scalar(lift["lifting_namespace"], "lift.lifting_namespace");
  if (lift["instance_namespace"]) {
    c.instance_namespace = Reader::scalar(lift["instance_namespace"], "lift.instance_namespace");
  }

  if (const YAML::Node a = root["align"]) {
    check_keys(a, "align", {"experts", "import_dirs", "manual", "threshold", "names", "formulas", "identifiers",
                            "confidence"});
    c.experts = r.paths(a["experts"], "align.experts");
    c.import_dirs = r.paths(a["import_dirs"], "align.import_dirs");
    c.manual_mappings = r.paths(a["manual"], "align.manual");
    if (a["threshold"]) c.threshold = Reader::value<double>(a["threshold"], "align.threshold");
    for (const std::string& n : r.iris(a["names"], "align.names")) c.facts.names.push_back(n);
    for (const std::string& f : r.iris(a["formulas"], "align.formulas")) c.facts.formulas.push_back(f);
    if (const YAML::Node ids = a["identifiers"]) {
      if (!ids.IsMap()) throw ConfigError("align.identifiers: expected a mapping");
      for (const auto& kv : ids) {
        c.facts.identifiers[r.iri(kv.first, "align.identifiers")] = Reader::scalar(kv.second, "align.identifiers");
      }
    }
    if (const YAML::Node conf = a["confidence"]) {
      check_keys(conf, "align.confidence", {"external_id", "formula", "label", "label_multilingual"});
      if (conf["external_id"]) c.matcher.external_id = Reader::value<double>(conf["external_id"], "align.confidence");
      if (conf["formula"]) c.matcher.formula = Reader::value<double>(conf["formula"], "align.confidence");
      if (conf["label"]) c.matcher.label = Reader::value<double>(conf["label"], "align.confidence");
      if (conf["label_multilingual"]) {
        c.matcher.label_multilingual = Reader::value<double>(conf["label_multilingual"], "align.confidence");
      }
    }
  }

  if (const YAML::Node e = root["enrichment"]) {
    check_keys(e, "enrichment", {"targets", "allow_live", "sources", "subject_predicate", "broader_predicate"});
    c.enrichment_targets = r.iris(e["targets"], "enrichment.targets");
    if (e["allow_live"]) c.allow_live = Reader::value<bool>(e["allow_live"], "enrichment.allow_live");
    if (e["subject_predicate"]) c.categories.subject = r.iri(e["subject_predicate"], "enrichment.subject_predicate");
    if (e["broader_predicate"]) c.categories.broader = r.iri(e["broader_predicate"], "enrichment.broader_predicate");
    for (const YAML::Node& s : Reader::sequence(e["sources"], "enrichment.sources")) {
      check_keys(s, "enrichment.sources", {"id", "kind", "location", "predicates"});
      enrich::EnrichmentSource src;
      if (s["id"]) src.id = Reader::scalar(s["id"], "enrichment.sources.id");
      const std::string kind = s["kind"] ? Reader::scalar(s["kind"], "enrichment.sources.kind") : "fixture-directory";
      if (kind == "fixture-directory") {
        src.kind = enrich::SourceKind::kFixtureDirectory;
        if (s["location"]) src.location = r.path(s["location"], "enrichment.sources.location").string();
      } else if (kind == "endpoint") {
        src.kind = enrich::SourceKind::kEndpoint;
        if (s["location"]) src.location = Reader::scalar(s["location"], "enrichment.sources.location");
      } else {
        throw ConfigError("enrichment.sources.kind: expected fixture-directory or endpoint, got '" + kind + "'");
      }
      src.predicates = r.iris(s["predicates"], "enrichment.sources.predicates");
      c.sources.push_back(std::move(src));
    }
  }

  if (const YAML::Node s = root["search"]) {
    check_keys(s, "search", {"label_predicates", "facets"});
    c.label_predicates = r.iris(s["label_predicates"], "search.label_predicates");
    for (const YAML::Node& f : Reader::sequence(s["facets"], "search.facets")) {
      check_keys(f, "search.facets", {"id", "kind", "anchor", "label"});
      search::FacetDefinition d;
      if (f["id"]) d.id = Reader::scalar(f["id"], "search.facets.id");
      if (!f["kind"] || !f["anchor"]) throw ConfigError("search.facets: 'kind' and 'anchor' are required");
      try {
        d.kind = search::facet_kind_from_name(Reader::scalar(f["kind"], "search.facets.kind"));
      } catch (const search::QueryError& e) {
        throw ConfigError(std::string("search.facets: ") + e.what());
      }
      d.anchor = r.iri(f["anchor"], "search.facets.anchor");
      d.label = f["label"] ? Reader::scalar(f["label"], "search.facets.label") : d.id;
      c.facets.push_back(std::move(d));
    }
  }
  if (c.label_predicates.empty()) {
    c.label_predicates = {std::string(vocab::kRdfsLabel), std::string(vocab::kSkosPrefLabel),
                          std::string(vocab::kSkosAltLabel)};
  }

  if (const YAML::Node s = root["service"]) {
    check_keys(s, "service", {"host", "port", "ui_dir", "admin_reload"});
    if (s["host"]) c.host = Reader::scalar(s["host"], "service.host");
    if (s["port"]) c.port = Reader::value<int>(s["port"], "service.port");
    if (s["ui_dir"]) c.ui_dir = r.path(s["ui_dir"], "service.ui_dir");
    if (s["admin_reload"]) c.admin_reload = Reader::value<bool>(s["admin_reload"], "service.admin_reload");
  }

  c.validate();
  return c;
}

PipelineConfig load_config(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), fs::absolute(file).parent_path());
}

}  // namespace semlift::service
