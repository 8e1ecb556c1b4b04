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

#include <random>

#include "semlift/align/match.hpp"
#include "semlift/rdf/turtle.hpp"
#include "support/files.hpp"

namespace semlift::align {
namespace {

Ontology load(const std::string& fixture) {
  return ontology_from_graph(rdf::parse_turtle(testing::read_fixture(fixture)));
}

TEST(FactsTest, ExtractsNamesFormulasAndIdentifiers) {
  rdf::Graph g = rdf::parse_turtle(testing::read_fixture("align/mixed/right.ttl"));
  IdentifierFacts facts = extract_facts(g);
  const EntityFacts& w = facts.at("http://example.org/right#w1");
  EXPECT_EQ(w.names, (std::vector<Label>{{"Wasser", "de"}}));
  EXPECT_EQ(w.formulas, (std::vector<std::string>{"H 2 O"}));
  EXPECT_EQ(w.ids, (std::vector<ExternalId>{{"cas", "7732-18-5"}}));
  EXPECT_EQ(facts.at("http://example.org/right#acid").ids[0].value, "64-19-7 ");
}

TEST(FactsTest, ConfiguredPredicates) {
  rdf::Graph g = rdf::parse_turtle(
      "@prefix o: <http://o/> . o:c1 o:compound_name \"water\" ; o:compound_casNumber \"7732-18-5\" ; "
      "o:compound_formula \"H2O\" .");
  FactPredicates preds;
  preds.names = {"http://o/compound_name"};
  preds.formulas = {"http://o/compound_formula"};
  preds.identifiers = {{"http://o/compound_casNumber", "cas"}};
  EntityFacts f = extract_facts(g, preds).at("http://o/c1");
  EXPECT_EQ(f.names, (std::vector<Label>{{"water", ""}}));
  EXPECT_EQ(f.formulas, (std::vector<std::string>{"H2O"}));
  EXPECT_EQ(f.ids, (std::vector<ExternalId>{{"cas", "7732-18-5"}}));
}

TEST(SuggestTest, SharedExternalIdGivesSameIndividual) {
  Ontology none;
  IdentifierFacts a{{"http://a/x", {{}, {}, {{"cas", "7732-18-5"}}}}};
  IdentifierFacts b{{"http://b/y", {{}, {}, {{"cas", "7732-18-5"}}}}};
  std::vector<MappingRule> rules = suggest_alignments({none, a}, {none, b});
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0], (MappingRule{MappingKind::kSameIndividual, "http://a/x", "http://b/y", 1.0, "external-id"}));
}

TEST(SuggestTest, TaggedAndUntaggedLabelGivesEquivalentClass) {
  Ontology a = ontology_from_graph(rdf::parse_turtle(
      "@prefix owl: <http://www.w3.org/2002/07/owl#> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> . "
      "<http://a/Compound> a owl:Class ; rdfs:label \"Compound\"@en ."));
  Ontology b = ontology_from_graph(rdf::parse_turtle(
      "@prefix owl: <http://www.w3.org/2002/07/owl#> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> . "
      "<http://b/C> a owl:Class ; rdfs:label \"compound\" ."));
  IdentifierFacts none;
  std::vector<MappingRule> rules = suggest_alignments({a, none}, {b, none});
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0], (MappingRule{MappingKind::kEquivalentClass, "http://a/Compound", "http://b/C", 0.8, "label"}));
}

TEST(SuggestTest, EmptyInputsGiveNoRules) {
  Ontology none;
  IdentifierFacts empty;
  EXPECT_TRUE(suggest_alignments({none, empty}, {none, empty}).empty());
}

struct Side {
  Ontology ontology;
  IdentifierFacts facts;
};

Side side(const std::string& fixture) {
  rdf::Graph g = rdf::parse_turtle(testing::read_fixture(fixture));
  return {ontology_from_graph(g), extract_facts(g)};
}

TEST(SuggestTest, MixedEvidenceFixtureMatchesHandAppliedRules) {
  Side left = side("align/mixed/left.ttl"), right = side("align/mixed/right.ttl");
  std::vector<MappingRule> rules = suggest_alignments({left.ontology, left.facts}, {right.ontology, right.facts});
  EXPECT_EQ(write_rules(rules), testing::read_fixture("align/mixed/expected.tsv"));
}

TEST(SuggestTest, SwappingSidesSwapsEveryPair) {
  Side left = side("align/mixed/left.ttl"), right = side("align/mixed/right.ttl");
  auto forward = suggest_alignments({left.ontology, left.facts}, {right.ontology, right.facts});
  auto backward = suggest_alignments({right.ontology, right.facts}, {left.ontology, left.facts});
  std::set<std::tuple<std::string, std::string, double>> f, b;
  for (const auto& r : forward) f.emplace(r.source, r.target, r.confidence);
  for (const auto& r : backward) b.emplace(r.target, r.source, r.confidence);
  EXPECT_EQ(f, b);
}

// Random individuals drawing evidence from small pools so that collisions
// are frequent.
IdentifierFacts random_facts(std::mt19937& rng, const std::string& ns) {
  static const std::vector<Label> labels = {{"water", "en"}, {"Wasser", "de"}, {"WATER", ""}, {"eau", "fr"},
                                            {"Éthanol", "fr"}, {"ethanol", "en"}, {"ethanol", ""}};
  static const std::vector<std::string> formulas = {"H2O", "H 2O", "C2H6O", "CH4O"};
  static const std::vector<std::string> values = {"1", "2", "3"};
  std::uniform_int_distribution<int> coin(0, 2), count(1, 6);
  IdentifierFacts facts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    EntityFacts& f = facts[ns + std::to_string(i)];
    if (coin(rng) == 0) f.names.push_back(labels[rng() % labels.size()]);
    if (coin(rng) == 0) f.formulas.push_back(formulas[rng() % formulas.size()]);
    if (coin(rng) == 0) f.ids.push_back({coin(rng) == 0 ? "cas" : "pubchem", values[rng() % values.size()]});
  }
  return facts;
}

std::map<std::pair<std::string, std::string>, double> pair_scores(const std::vector<MappingRule>& rules) {
  std::map<std::pair<std::string, std::string>, double> out;
  for (const auto& r : rules) out[{r.source, r.target}] = r.confidence;
  return out;
}

TEST(SuggestProperty, ExtraEvidenceNeverLowersConfidence) {
  std::mt19937 rng(7);
  Ontology none;
  for (int trial = 0; trial < 500; ++trial) {
    IdentifierFacts a = random_facts(rng, "http://a/"), b = random_facts(rng, "http://b/");
    auto before = pair_scores(suggest_alignments({none, a}, {none, b}));
    IdentifierFacts& grown = rng() % 2 ? a : b;
    auto it = std::next(grown.begin(), static_cast<long>(rng() % grown.size()));
    it->second.ids.push_back({"cas", std::to_string(rng() % 3 + 1)});
    auto after = pair_scores(suggest_alignments({none, a}, {none, b}));
    for (const auto& [pair, score] : before) {
      ASSERT_TRUE(after.count(pair));
      EXPECT_GE(after[pair], score);
    }
  }
}

TEST(SuggestProperty, SymmetricUpToDirection) {
  std::mt19937 rng(11);
  Ontology none;
  for (int trial = 0; trial < 500; ++trial) {
    IdentifierFacts a = random_facts(rng, "http://a/"), b = random_facts(rng, "http://b/");
    auto forward = pair_scores(suggest_alignments({none, a}, {none, b}));
    std::map<std::pair<std::string, std::string>, double> swapped;
    for (const auto& [pair, score] : pair_scores(suggest_alignments({none, b}, {none, a}))) {
      swapped[{pair.second, pair.first}] = score;
    }
    EXPECT_EQ(forward, swapped);
  }
}

TEST(SuggestProperty, OutputIsSortedAndValid) {
  std::mt19937 rng(13);
  Ontology none;
  for (int trial = 0; trial < 200; ++trial) {
    IdentifierFacts a = random_facts(rng, "http://a/"), b = random_facts(rng, "http://b/");
    auto rules = suggest_alignments({none, a}, {none, b});
    for (std::size_t i = 0; i < rules.size(); ++i) {
      EXPECT_NO_THROW(rules[i].validate());
      if (i == 0) continue;
      const auto& p = rules[i - 1];
      const auto& q = rules[i];
      EXPECT_TRUE(p.confidence > q.confidence ||
                  (p.confidence == q.confidence && std::tie(p.source, p.target) < std::tie(q.source, q.target)));
    }
  }
}

TEST(SuggestTest, DerivedOntologyAlignsToExpertStub) {
  Ontology chebi = load("align/expert/chebi.ttl");
  IdentifierFacts chebi_facts = extract_facts(chebi.graph);
  rdf::Graph local = rdf::parse_turtle(
      "@prefix o: <http://example.org/thermo/onto#> . @prefix d: <http://example.org/thermo/data/d1/compound/> . "
      "@prefix owl: <http://www.w3.org/2002/07/owl#> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> . "
      "o:Compound a owl:Class ; rdfs:label \"compound\" . "
      "d:1 a o:Compound ; o:compound_name \"water\" ; o:compound_casNumber \"7732-18-5\" .");
  FactPredicates preds;
  preds.names.push_back("http://example.org/thermo/onto#compound_name");
  preds.identifiers["http://example.org/thermo/onto#compound_casNumber"] = "cas";
  IdentifierFacts local_facts = extract_facts(local, preds);
  Ontology local_onto = ontology_from_graph(local);
  auto rules = suggest_alignments({local_onto, local_facts}, {chebi, chebi_facts});
  EXPECT_EQ(write_rules(rules),
            "SameIndividual\thttp://example.org/thermo/data/d1/compound/1\thttp://purl.obolibrary.org/obo/"
            "CHEBI_15377\t1.0\texternal-id\n"
            "EquivalentClass\thttp://example.org/thermo/onto#Compound\thttp://purl.obolibrary.org/obo/"
            "CHEBI_37577\t0.8\tlabel\n");
}

}  // namespace
}  // namespace semlift::align
