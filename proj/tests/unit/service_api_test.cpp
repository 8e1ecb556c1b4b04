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

#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "semlift/rdf/turtle.hpp"
#include "semlift/rdf/vocab.hpp"
#include "semlift/service/api.hpp"
#include "semlift/service/server.hpp"
#include "semlift/text/percent.hpp"
#include "support/files.hpp"

namespace semlift::service {
namespace {

using nlohmann::json;
using rdf::Term;

const std::string kOnto = "http://example.org/search/onto#";
const std::string kData = "http://example.org/search/data/";
const std::string kCat = "http://example.org/search/category/";

SnapshotSettings fixture_settings() {
  SnapshotSettings s;
  s.label_predicates = {std::string(vocab::kRdfsLabel), std::string(vocab::kSkosPrefLabel),
                        std::string(vocab::kSkosAltLabel)};
  s.facets = {
      {"class", search::FacetKind::kClassHierarchy, kOnto + "Compound", "Compound class"},
      {"role", search::FacetKind::kClassHierarchy, kOnto + "Role", "Role"},
      {"phase", search::FacetKind::kPropertyValue, kOnto + "phase", "Phase"},
      {"topic", search::FacetKind::kCategory, kCat + "Chemistry", "Topic"},
  };
  s.prefixes = {{"o", kOnto}, {"d", kData}, {"rdfs", std::string(vocab::kRdfs)}};
  return s;
}

std::shared_ptr<const Snapshot> fixture_snapshot() {
  return build_snapshot(rdf::parse_turtle(testing::read_fixture("search/data.ttl")),
                        align::ontology_from_graph(rdf::parse_turtle(testing::read_fixture("search/ontology.ttl"))),
                        fixture_settings());
}

const Snapshot& snapshot() {
  static const std::shared_ptr<const Snapshot> s = fixture_snapshot();
  return *s;
}

Request get(const std::string& path, std::map<std::string, std::string> query = {},
            std::map<std::string, std::string> headers = {}) {
  return {"GET", path, std::move(query), std::move(headers), ""};
}

Request post(const std::string& path, const std::string& body) { return {"POST", path, {}, {}, body}; }

std::string entity_path(const std::string& iri) { return "/entity/" + text::percent_encode(iri); }

TEST(ApiTest, AutocompleteDelegatesToIndex) {
  const Snapshot& s = snapshot();
  for (const std::string q : {"wa", "Was", "eth", "säu", "zzz", ""}) {
    json body = json::parse(handle_autocomplete(s, get("/autocomplete", {{"q", q}, {"limit", "7"}})).body);
    auto expected = s.index.complete(q, 7);
    ASSERT_EQ(body.size(), expected.size()) << q;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(body[i]["surface"], expected[i].surface);
      EXPECT_EQ(body[i]["concept"], expected[i].concept_iri);
      EXPECT_EQ(body[i]["language"], expected[i].language);
      EXPECT_DOUBLE_EQ(body[i]["score"].get<double>(), expected[i].score);
    }
  }
}

TEST(ApiTest, AutocompleteReturnsBothSurfacesOfWater) {
  SnapshotSettings settings = fixture_settings();
  settings.facets.clear();
  auto s = build_snapshot(rdf::parse_turtle(testing::read_fixture("search/labels100.ttl")), align::Ontology{}, settings);
  json body = json::parse(handle_autocomplete(*s, get("/autocomplete", {{"q", "was"}, {"limit", "100"}})).body);
  std::set<std::string> water;
  for (const json& c : body) {
    if (c["concept"] == "http://example.org/labels/W") water.insert(c["surface"].get<std::string>());
  }
  EXPECT_EQ(water, (std::set<std::string>{"Wasser", "water"}));
}

TEST(ApiTest, AutocompleteRejectsBadLimit) {
  EXPECT_EQ(handle_autocomplete(snapshot(), get("/autocomplete", {{"q", "w"}, {"limit", "0"}})).status, 400);
  EXPECT_EQ(handle_autocomplete(snapshot(), get("/autocomplete", {{"q", "w"}, {"limit", "ten"}})).status, 400);
  EXPECT_EQ(handle_autocomplete(snapshot(), get("/autocomplete", {{"q", "w"}, {"limit", "-1"}})).status, 400);
}

TEST(ApiTest, EmptySearchReturnsAllTypedEntities) {
  const Snapshot& s = snapshot();
  json body = json::parse(handle_search(s, post("/search", R"({"limit": 1000})")).body);
  EXPECT_EQ(body["total"], s.engine->universe().size());
  EXPECT_EQ(body["total"], 20U);
  EXPECT_EQ(body["entities"].size(), 20U);
  json paged = json::parse(handle_search(s, post("/search", R"({"offset": 18, "limit": 5})")).body);
  EXPECT_EQ(paged["entities"].size(), 2U);
  EXPECT_EQ(paged["entities"][0], body["entities"][18]);
  json defaults = json::parse(handle_search(s, post("/search", "")).body);
  EXPECT_EQ(defaults["limit"], 20U);
}

TEST(ApiTest, SearchMatchesEngine) {
  const Snapshot& s = snapshot();
  json body = json::parse(handle_search(s, post("/search", R"({"selections": [
      {"facet": "class", "values": [")" + kOnto + R"(Alcohol"]},
      {"facet": "phase", "values": ["liquid"]}], "limit": 1000})"))
                              .body);
  auto expected = s.engine->evaluate({{"class", {Term::iri(kOnto + "Alcohol")}}, {"phase", {Term::literal("liquid")}}});
  ASSERT_EQ(body["total"], expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(body["entities"][i]["iri"], expected[i].value());
  for (const json& x : body["suggestions"]) {
    EXPECT_GT(x["count"].get<std::size_t>(), 0U);
    if (x["origin"] == "hierarchy-expanded") EXPECT_TRUE(x.contains("via"));
  }
}

// Random selections over attested values: the API reports what the engine computes.
TEST(ApiTest, DelegationOnRandomSelections) {
  const Snapshot& s = snapshot();
  std::vector<std::pair<std::string, Term>> pool;
  for (const Term& e : s.engine->universe()) {
    for (const std::string& t : s.engine->types(e)) pool.push_back({t.rfind(kOnto, 0) == 0 ? "class" : "role", Term::iri(t)});
    for (const Term& p : s.graph.objects(e, Term::iri(kOnto + "phase"))) pool.push_back({"phase", p});
  }
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<search::FilterSelection> sel;
    json jsel = json::array();
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < n; ++i) {
      const auto& [facet, value] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      if (!s.engine->facet(facet)) continue;
      sel.push_back({facet, {value}});
      json v = value.is_iri() ? json{{"type", "iri"}, {"value", value.value()}}
                              : json{{"type", "literal"}, {"value", value.value()}};
      jsel.push_back({{"facet", facet}, {"values", {v}}});
    }
    Response r = handle_search(s, post("/search", json{{"selections", jsel}, {"limit", 1000}}.dump()));
    ASSERT_EQ(r.status, 200) << r.body;
    json body = json::parse(r.body);
    auto expected = s.engine->evaluate(sel);
    ASSERT_EQ(body["total"], expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(body["entities"][i]["iri"], expected[i].value());
    auto suggestions = s.engine->suggest(s.engine->state(sel));
    ASSERT_EQ(body["suggestions"].size(), suggestions.size());
    for (std::size_t i = 0; i < suggestions.size(); ++i) {
      EXPECT_EQ(body["suggestions"][i]["facet"], suggestions[i].facet);
      EXPECT_EQ(body["suggestions"][i]["value"]["value"], suggestions[i].value.value());
      EXPECT_EQ(body["suggestions"][i]["count"], suggestions[i].count);
    }
  }
}

TEST(ApiTest, SearchRejectsMalformedInput) {
  const Snapshot& s = snapshot();
  for (const std::string body : {"{", "[]", R"({"offset": -1})", R"({"limit": 1001})", R"({"limit": "5"})",
                                 R"({"selections": {}})", R"({"selections": [{"facet": "colour", "values": ["x"]}]})",
                                 R"({"selections": [{"facet": "class", "values": ["not an iri"]}]})",
                                 R"({"selections": [{"facet": "class", "values": [{"value": "x"}]}]})",
                                 R"({"keyword": 3})"}) {
    Response r = handle_search(s, post("/search", body));
    EXPECT_EQ(r.status, 400) << body;
    EXPECT_TRUE(json::parse(r.body).contains("error")) << body;
  }
}

TEST(ApiTest, EntityTurtleEqualsSubjectTriples) {
  const Snapshot& s = snapshot();
  const std::string iri = kData + "water";
  Response r = handle_entity(s, text::percent_encode(iri), get("", {}, {{"accept", "text/turtle"}}));
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type.rfind("text/turtle", 0), 0U);
  rdf::Graph expected;
  for (const rdf::Triple& t : s.graph.match(Term::iri(iri), std::nullopt, std::nullopt)) expected.insert(t);
  EXPECT_EQ(rdf::parse_turtle(r.body).triples(), expected.triples());
}

TEST(ApiTest, EntityJson) {
  const Snapshot& s = snapshot();
  const std::string iri = kData + "water";
  for (const std::string accept : {"", "application/json", "*/*", "text/html;q=0.5, application/json"}) {
    Response r = handle_entity(s, text::percent_encode(iri), get("", {}, {{"accept", accept}}));
    ASSERT_EQ(r.status, 200) << accept;
    json body = json::parse(r.body);
    EXPECT_EQ(body["iri"], iri);
    EXPECT_EQ(body["label"], s.engine->label(Term::iri(iri)));
    EXPECT_EQ(body["properties"].size(), s.graph.match(Term::iri(iri), std::nullopt, std::nullopt).size());
  }
}

TEST(ApiTest, EntityStatusCodes) {
  const Snapshot& s = snapshot();
  EXPECT_EQ(handle_entity(s, text::percent_encode(kData + "nothing"), get("")).status, 404);
  EXPECT_EQ(handle_entity(s, text::percent_encode(kData + "water"), get("", {}, {{"accept", "image/png"}})).status, 406);
  EXPECT_EQ(handle_entity(s, "http%3", get("")).status, 400);
  EXPECT_EQ(handle_entity(s, "not%20an%20iri", get("")).status, 400);
}

TEST(ApiTest, RoutingAndReload) {
  SnapshotStore store(fixture_snapshot());
  Api plain(store);
  EXPECT_EQ(plain.handle(get("/nowhere")).status, 404);
  EXPECT_EQ(plain.handle(post("/admin/reload", "")).status, 404);
  EXPECT_EQ(plain.handle(get("/search")).status, 404);
  json facets = json::parse(plain.handle(get("/facets")).body);
  ASSERT_EQ(facets.size(), 4U);
  EXPECT_EQ(facets[3]["kind"], "category");
  json health = json::parse(plain.handle(get("/health")).body);
  EXPECT_EQ(health["status"], "ok");
  EXPECT_EQ(health["snapshot"], store.get()->hash);
  EXPECT_EQ(plain.handle(get(entity_path(kData + "water"))).status, 200);

  auto before = store.get();
  Api admin(store, [] {
    SnapshotSettings s = fixture_settings();
    s.facets.pop_back();
    return build_snapshot(rdf::parse_turtle(testing::read_fixture("search/data.ttl")),
                          align::ontology_from_graph(rdf::parse_turtle(testing::read_fixture("search/ontology.ttl"))), s);
  });
  Response r = admin.handle(post("/admin/reload", ""));
  ASSERT_EQ(r.status, 200);
  EXPECT_NE(store.get()->hash, before->hash);
  EXPECT_EQ(json::parse(r.body)["snapshot"], store.get()->hash);
  EXPECT_EQ(json::parse(admin.handle(get("/facets")).body).size(), 3U);
  EXPECT_EQ(before->facets.size(), 4U);
}

TEST(ApiTest, IndependentSnapshotsGiveIdenticalBodies) {
  auto a = fixture_snapshot();
  auto b = fixture_snapshot();
  EXPECT_EQ(a->hash, b->hash);
  SnapshotStore sa(a), sb(b);
  Api x(sa), y(sb);
  const std::vector<Request> script = {
      get("/autocomplete", {{"q", "eth"}}),
      get("/facets"),
      get("/health"),
      post("/search", "{}"),
      post("/search", R"({"selections": [{"facet": "phase", "values": ["gas"]}], "keyword": "alk"})"),
      get(entity_path(kData + "water")),
      get(entity_path(kData + "water"), {}, {{"accept", "text/turtle"}}),
  };
  for (const Request& r : script) {
    Response ra = x.handle(r), rb = y.handle(r);
    EXPECT_EQ(ra.status, rb.status) << r.path;
    EXPECT_EQ(ra.body, rb.body) << r.path;
  }
}

TEST(HttpServerTest, ServesApiOverLoopback) {
  SnapshotStore store(fixture_snapshot());
  Api api(store);
  HttpServer server(api);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });
  while (!server.running()) std::this_thread::yield();

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(health->body, api.handle(get("/health")).body);

  auto completion = client.Get("/autocomplete?q=wat&limit=3");
  ASSERT_TRUE(completion);
  EXPECT_EQ(completion->body, api.handle(get("/autocomplete", {{"q", "wat"}, {"limit", "3"}})).body);

  auto entity = client.Get(entity_path(kData + "water"), {{"Accept", "text/turtle"}});
  ASSERT_TRUE(entity);
  EXPECT_EQ(entity->status, 200);
  EXPECT_EQ(entity->get_header_value("Content-Type").rfind("text/turtle", 0), 0U);
  EXPECT_EQ(client.Get(entity_path(kData + "water"), {{"Accept", "image/png"}})->status, 406);

  const std::string query = R"({"selections": [{"facet": "class", "values": [")" + kOnto + R"(Acid"]}]})";
  const std::string expected = api.handle(post("/search", query)).body;
  std::atomic<int> mismatches{0};
  std::vector<std::thread> clients;
  for (int i = 0; i < 8; ++i) {
    clients.emplace_back([&] {
      httplib::Client c("127.0.0.1", port);
      for (int j = 0; j < 10; ++j) {
        auto res = c.Post("/search", query, "application/json");
        if (!res || res->status != 200 || res->body != expected) ++mismatches;
      }
    });
  }
  for (std::thread& t : clients) t.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_EQ(client.Get("/missing")->status, 404);

  server.stop();
  loop.join();
}

}  // namespace
}  // namespace semlift::service
