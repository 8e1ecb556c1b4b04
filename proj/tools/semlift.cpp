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

#include <csignal>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semlift/align/ontology.hpp"
#include "semlift/enrich/enrich.hpp"
#include "semlift/lift/lift.hpp"
#include "semlift/lift/schema.hpp"
#include "semlift/service/api.hpp"
#include "semlift/service/config.hpp"
#include "semlift/service/pipeline.hpp"
#include "semlift/service/server.hpp"
#include "semlift/service/snapshot.hpp"

namespace {

using namespace semlift;
using namespace semlift::service;

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "config";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const lift::SchemaError*>(&e)) return "schema";
  if (dynamic_cast<const lift::ConversionError*>(&e)) return "conversion";
  if (dynamic_cast<const align::OntologyError*>(&e)) return "ontology";
  if (dynamic_cast<const enrich::EnrichmentError*>(&e)) return "enrichment";
  if (dynamic_cast<const search::QueryError*>(&e)) return "query";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  return "error";
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return s;
}

struct Options {
  std::string config;
  std::string out;
  bool verbose = false;
  std::string schema;
  std::vector<std::string> documents;
  double threshold = -1;
  std::string host;
  int port = -1;
  std::string ui_dir;
  std::string complete;
  std::size_t limit = 10;
  std::size_t offset = 0;
  std::vector<std::string> selects;
  std::string keyword;
};

PipelineConfig configure(const Options& o) {
  std::string path = o.config;
  if (path.empty()) {
    if (const char* env = std::getenv("SEMLIFT_CONFIG")) path = env;
  }
  if (path.empty()) throw ConfigError("--config PATH or SEMLIFT_CONFIG is required");
  PipelineConfig c = load_config(path);
  if (!o.out.empty()) c.output_dir = std::filesystem::absolute(o.out);
  if (!o.schema.empty()) c.schema = std::filesystem::absolute(o.schema);
  if (!o.documents.empty()) {
    c.documents.clear();
    for (const std::string& d : o.documents) c.documents.push_back(std::filesystem::absolute(d));
  }
  if (o.threshold >= -0.5) c.threshold = o.threshold;
  if (!o.host.empty()) c.host = o.host;
  if (o.port >= 0) c.port = o.port;
  if (!o.ui_dir.empty()) c.ui_dir = std::filesystem::absolute(o.ui_dir);
  c.validate();
  return c;
}

// "facet=value": IRIs may be written as CURIEs with the config prefixes.
nlohmann::json selections_json(const PipelineConfig& c, const std::vector<std::string>& selects) {
  std::map<std::string, nlohmann::json> by_facet;
  std::vector<std::string> order;
  for (const std::string& s : selects) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--select expects facet=value, got '" + s + "'");
    const std::string facet = s.substr(0, eq);
    std::string value = s.substr(eq + 1);
    auto colon = value.find(':');
    if (colon != std::string::npos && value.compare(colon, 3, "://") != 0) {
      auto it = c.prefixes.find(value.substr(0, colon));
      if (it != c.prefixes.end()) value = it->second + value.substr(colon + 1);
    }
    if (!by_facet.count(facet)) order.push_back(facet);
    by_facet[facet].push_back(value);
  }
  nlohmann::json out = nlohmann::json::array();
  for (const std::string& f : order) out.push_back({{"facet", f}, {"values", by_facet[f]}});
  return out;
}

int run_query(const PipelineConfig& c, const Options& o) {
  auto snapshot = load_snapshot(c, Artifacts(c.output_dir));
  Request r;
  Response res;
  if (!o.complete.empty()) {
    r.method = "GET";
    r.query = {{"q", o.complete}, {"limit", std::to_string(o.limit)}};
    res = handle_autocomplete(*snapshot, r);
  } else {
    r.method = "POST";
    nlohmann::json body = {{"selections", selections_json(c, o.selects)}, {"offset", o.offset}, {"limit", o.limit}};
    if (!o.keyword.empty()) body["keyword"] = o.keyword;
    r.body = body.dump();
    res = handle_search(*snapshot, r);
  }
  if (res.status != 200) {
    std::cerr << "error: query: " << nlohmann::json::parse(res.body)["error"].get<std::string>() << "\n";
    return 1;
  }
  std::cout << res.body << "\n";
  return 0;
}

int run_serve(const PipelineConfig& c, const Options& o, const Log& log) {
  Artifacts artifacts(c.output_dir);
  SnapshotStore store(load_snapshot(c, artifacts));
  Api::Reloader reloader;
  if (c.admin_reload) {
    reloader = [o, log]() {
      PipelineConfig fresh = configure(o);
      Artifacts a(fresh.output_dir);
      step_index(fresh, a, log);
      return load_snapshot(fresh, a);
    };
  }
  Api api(store, reloader);
  HttpServer server(api, c.ui_dir);
  int port = server.bind(c.host, c.port);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on http://" << c.host << ":" << port << " snapshot " << store.get()->hash << std::endl;
  server.listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semlift: lift XML into RDF, align, enrich and search the result"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "Pipeline configuration (YAML); falls back to SEMLIFT_CONFIG");
  app.add_option("--out", o.out, "Artifact directory, overriding output_dir");
  app.add_flag("-v,--verbose", o.verbose, "Report progress on stderr");

  auto* lift_schema = app.add_subcommand("lift-schema", "Schema -> ontology.ttl, lift-report.txt");
  lift_schema->add_option("--schema", o.schema, "XML schema, overriding lift.schema");
  auto* convert = app.add_subcommand("convert", "Documents -> data.nt");
  convert->add_option("--schema", o.schema, "XML schema, overriding lift.schema");
  convert->add_option("--document", o.documents, "Input document (repeatable), overriding lift.documents");
  auto* align = app.add_subcommand("align", "ontology.ttl + data.nt + experts -> mappings.tsv");
  auto* apply = app.add_subcommand("apply", "mappings.tsv -> aligned.nt, justifications.tsv");
  apply->add_option("--threshold", o.threshold, "Confidence threshold, overriding align.threshold")
      ->check(CLI::Range(0.0, 1.0));
  auto* enrich = app.add_subcommand("enrich", "aligned.nt -> enriched.nt, enrichment-report.tsv");
  auto* index = app.add_subcommand("index", "enriched.nt -> final.nt, snapshot.json");
  auto* pipeline = app.add_subcommand("pipeline", "Run every step from lift-schema to index");
  pipeline->add_option("--document", o.documents, "Input document (repeatable), overriding lift.documents");
  auto* serve = app.add_subcommand("serve", "Serve the snapshot over HTTP");
  serve->add_option("--host", o.host, "Listen address, overriding service.host");
  serve->add_option("--port", o.port, "Listen port (0 picks one), overriding service.port")->check(CLI::Range(0, 65535));
  serve->add_option("--ui-dir", o.ui_dir, "Static UI directory served at /ui/");
  auto* query = app.add_subcommand("query", "Run one autocomplete or facet query against the snapshot");
  auto* complete = query->add_option("--complete", o.complete, "Autocomplete text");
  query->add_option("--select", o.selects, "facet=value selection (repeatable)")->excludes(complete);
  query->add_option("--keyword", o.keyword, "Keyword filter for suggestions")->excludes(complete);
  query->add_option("--limit", o.limit, "Maximum results")->check(CLI::Range(1, 1000));
  query->add_option("--offset", o.offset, "Offset into the entity list");

  CLI11_PARSE(app, argc, argv);

  Log log;
  if (o.verbose) log = [](const std::string& line) { std::cerr << line << "\n"; };
  try {
    PipelineConfig c = configure(o);
    Artifacts a(c.output_dir);
    if (*lift_schema) step_lift_schema(c, a, log);
    if (*convert) step_convert(c, a, log);
    if (*align) step_align(c, a, log);
    if (*apply) step_apply(c, a, log);
    if (*enrich) step_enrich(c, a, log);
    if (*index) step_index(c, a, log);
    if (*pipeline) run_pipeline(c, a, log);
    if (*serve) return run_serve(c, o, log);
    if (*query) return run_query(c, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << kind_of(e) << ": " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}
