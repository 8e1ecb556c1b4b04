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

#include "semlift/service/api.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "semlift/rdf/turtle.hpp"
#include "semlift/text/percent.hpp"

namespace semlift::service {
namespace {

using nlohmann::json;
using rdf::Term;

constexpr std::size_t kDefaultCompletions = 10;
constexpr std::size_t kDefaultPage = 20;
constexpr std::size_t kMaxPage = 1000;

class BadRequest : public Error {
 public:
  using Error::Error;
};

Response json_response(const json& body, int status = 200) { return {status, "application/json", body.dump()}; }

Response error_response(int status, const std::string& message) { return json_response({{"error", message}}, status); }

json term_json(const Term& t) {
  if (t.is_iri()) return {{"type", "iri"}, {"value", t.as_iri().str()}};
  if (t.is_blank()) return {{"type", "blank"}, {"value", t.as_blank().label()}};
  const rdf::Literal& l = t.as_literal();
  json j = {{"type", "literal"}, {"value", l.lexical()}};
  if (l.language()) {
    j["language"] = *l.language();
  } else {
    j["datatype"] = l.datatype().str();
  }
  return j;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) throw BadRequest(what + " must be a non-negative integer");
  return v;
}

std::size_t json_count(const json& body, const char* key, std::size_t fallback) {
  if (!body.contains(key)) return fallback;
  const json& v = body[key];
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw BadRequest(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Term parse_value(const json& v, const search::FacetDefinition& f) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (f.kind != search::FacetKind::kPropertyValue) {
      if (!rdf::Iri::is_valid(s)) throw BadRequest("value for facet '" + f.id + "' must be an IRI: " + s);
      return Term::iri(s);
    }
    return rdf::Iri::is_valid(s) && s.find("://") != std::string::npos ? Term::iri(s) : Term::literal(s);
  }
  if (!v.is_object() || !v.contains("type") || !v.contains("value") || !v["type"].is_string() ||
      !v["value"].is_string()) {
    throw BadRequest("selection values must be strings or {type, value} objects");
  }
  const std::string type = v["type"].get<std::string>();
  const std::string value = v["value"].get<std::string>();
  try {
    if (type == "iri") return Term::iri(value);
    if (type == "literal") {
      if (v.contains("language")) return Term::lang_literal(value, v["language"].get<std::string>());
      if (v.contains("datatype")) return Term::literal(value, v["datatype"].get<std::string>());
      return Term::literal(value);
    }
  } catch (const ValidationError& e) {
    throw BadRequest(std::string("invalid value: ") + e.what());
  } catch (const json::exception&) {
    throw BadRequest("invalid value object");
  }
  throw BadRequest("unknown value type '" + type + "'");
}

std::vector<search::FilterSelection> parse_selections(const Snapshot& s, const json& body) {
  std::vector<search::FilterSelection> out;
  if (!body.contains("selections")) return out;
  if (!body["selections"].is_array()) throw BadRequest("selections must be an array");
  for (const json& sel : body["selections"]) {
    if (!sel.is_object() || !sel.contains("facet") || !sel["facet"].is_string()) {
      throw BadRequest("each selection needs a string 'facet'");
    }
    const std::string id = sel["facet"].get<std::string>();
    const search::FacetDefinition* f = s.engine->facet(id);
    if (f == nullptr) throw BadRequest("unknown facet '" + id + "'");
    search::FilterSelection fs{id, {}};
    if (sel.contains("values")) {
      if (!sel["values"].is_array()) throw BadRequest("selection values must be an array");
      for (const json& v : sel["values"]) fs.values.push_back(parse_value(v, *f));
    }
    out.push_back(std::move(fs));
  }
  return out;
}

// Preferred representation for an Accept header: "json", "turtle" or empty
// when nothing acceptable is offered.
std::string negotiate(const std::string& accept) {
  if (accept.empty()) return "json";
  struct Option {
    double q;
    std::size_t order;
    std::string type;
  };
  std::vector<Option> options;
  std::stringstream in(accept);
  std::string item;
  for (std::size_t order = 0; std::getline(in, item, ','); ++order) {
    std::stringstream parts(item);
    std::string type;
    std::getline(parts, type, ';');
    double q = 1.0;
    for (std::string param; std::getline(parts, param, ';');) {
      param.erase(0, param.find_first_not_of(' '));
      if (param.rfind("q=", 0) == 0) q = std::atof(param.c_str() + 2);
    }
    type.erase(0, type.find_first_not_of(' '));
    type.erase(type.find_last_not_of(' ') + 1);
    std::transform(type.begin(), type.end(), type.begin(), [](unsigned char c) { return std::tolower(c); });
    if (q > 0) options.push_back({q, order, type});
  }
  std::stable_sort(options.begin(), options.end(), [](const Option& a, const Option& b) { return a.q > b.q; });
  for (const Option& o : options) {
    if (o.type == "text/turtle" || o.type == "text/*") return "turtle";
    if (o.type == "application/json" || o.type == "application/*" || o.type == "*/*") return "json";
  }
  return "";
}

}  // namespace

Response handle_autocomplete(const Snapshot& s, const Request& r) {
  try {
    auto q = r.query.find("q");
    std::size_t limit = kDefaultCompletions;
    if (auto l = r.query.find("limit"); l != r.query.end()) limit = parse_count(l->second, "limit");
    if (limit == 0) throw BadRequest("limit must be at least 1");
    json out = json::array();
    for (const search::Completion& c : s.index.complete(q == r.query.end() ? "" : q->second, limit)) {
      out.push_back({{"surface", c.surface},
                     {"language", c.language},
                     {"concept", c.concept_iri},
                     {"label", s.engine->label(Term::iri(c.concept_iri))},
                     {"score", c.score}});
    }
    return json_response(out);
  } catch (const BadRequest& e) {
    return error_response(400, e.what());
  }
}

Response handle_facets(const Snapshot& s) {
  json out = json::array();
  for (const search::FacetDefinition& f : s.facets) {
    out.push_back({{"id", f.id}, {"kind", search::facet_kind_name(f.kind)}, {"anchor", f.anchor}, {"label", f.label}});
  }
  return json_response(out);
}

Response handle_search(const Snapshot& s, const Request& r) {
  try {
    json body = json::object();
    if (!r.body.empty()) {
      body = json::parse(r.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) throw BadRequest("body must be a JSON object");
    }
    auto selections = parse_selections(s, body);
    const std::size_t offset = json_count(body, "offset", 0);
    const std::size_t limit = json_count(body, "limit", kDefaultPage);
    if (limit > kMaxPage) throw BadRequest("limit must not exceed " + std::to_string(kMaxPage));
    std::string keyword;
    if (body.contains("keyword")) {
      if (!body["keyword"].is_string()) throw BadRequest("keyword must be a string");
      keyword = body["keyword"].get<std::string>();
    }

    search::FacetState state = s.engine->state(std::move(selections));
    json entities = json::array();
    for (std::size_t i = offset; i < state.results.size() && i < offset + limit; ++i) {
      const Term& e = state.results[i];
      entities.push_back({{"iri", e.as_iri().str()}, {"label", s.engine->label(e)}, {"types", s.engine->types(e)}});
    }
    json suggestions = json::array();
    for (const search::FacetSuggestion& x : s.engine->suggest(state, keyword)) {
      json j = {{"facet", x.facet},
                {"value", term_json(x.value)},
                {"label", s.engine->label(x.value)},
                {"count", x.count},
                {"origin", x.origin == search::Origin::kDirect ? "direct" : "hierarchy-expanded"}};
      if (x.origin == search::Origin::kHierarchyExpanded) {
        j["via"] = x.via;
        j["from"] = x.from;
      }
      suggestions.push_back(std::move(j));
    }
    return json_response({{"total", state.results.size()},
                          {"offset", offset},
                          {"limit", limit},
                          {"entities", entities},
                          {"suggestions", suggestions}});
  } catch (const BadRequest& e) {
    return error_response(400, e.what());
  } catch (const search::QueryError& e) {
    return error_response(400, e.what());
  }
}

Response handle_entity(const Snapshot& s, const std::string& encoded_iri, const Request& r) {
  auto iri = text::percent_decode(encoded_iri);
  if (!iri || !rdf::Iri::is_valid(*iri)) return error_response(400, "malformed entity IRI");
  auto accept = r.headers.find("accept");
  const std::string format = negotiate(accept == r.headers.end() ? "" : accept->second);
  if (format.empty()) return error_response(406, "supported types: application/json, text/turtle");

  const Term subject = Term::iri(*iri);
  std::vector<rdf::Triple> triples = s.graph.match(subject, std::nullopt, std::nullopt);
  if (triples.empty()) return error_response(404, "unknown entity: " + *iri);

  if (format == "turtle") {
    rdf::Graph g;
    for (const rdf::Triple& t : triples) g.insert(t);
    return {200, "text/turtle; charset=utf-8", rdf::write_turtle(g, s.prefixes)};
  }

  json labels = json::array();
  for (const std::string& p : s.label_predicates) {
    for (const Term& o : s.graph.objects(subject, Term::iri(p))) {
      if (!o.is_literal()) continue;
      labels.push_back({{"value", o.as_literal().lexical()},
                        {"language", o.as_literal().language().value_or("")},
                        {"predicate", p}});
    }
  }
  json properties = json::array();
  for (const rdf::Triple& t : triples) {
    properties.push_back({{"predicate", t.predicate().as_iri().str()}, {"object", term_json(t.object())}});
  }
  return json_response({{"iri", *iri},
                        {"label", s.engine->label(subject)},
                        {"types", s.engine->types(subject)},
                        {"labels", labels},
                        {"categories", enrich::categories_of(s.graph, *iri, s.categories)},
                        {"properties", properties}});
}

Response handle_health(const Snapshot& s) {
  return json_response({{"status", "ok"}, {"snapshot", s.hash}});
}

Response Api::handle(const Request& r) const {
  std::shared_ptr<const Snapshot> s = store_.get();
  const std::string path = r.path.substr(0, r.path.find('?'));
  if (r.method == "GET") {
    if (path == "/autocomplete") return handle_autocomplete(*s, r);
    if (path == "/facets") return handle_facets(*s);
    if (path == "/health") return handle_health(*s);
    if (path.rfind("/entity/", 0) == 0) return handle_entity(*s, path.substr(8), r);
  }
  if (r.method == "POST") {
    if (path == "/search") return handle_search(*s, r);
    if (path == "/admin/reload" && reloader_) {
      try {
        std::shared_ptr<const Snapshot> next = reloader_();
        store_.set(next);
        return handle_health(*next);
      } catch (const Error& e) {
        return error_response(500, std::string("reload failed: ") + e.what());
      }
    }
  }
  return error_response(404, "no such endpoint: " + r.method + " " + path);
}

}  // namespace semlift::service
