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

#include <algorithm>
#include <random>

#include "semlift/rdf/turtle.hpp"
#include "semlift/rdf/vocab.hpp"
#include "semlift/search/facets.hpp"
#include "semlift/text/normalize.hpp"
#include "support/files.hpp"
#include "support/search_oracle.hpp"

namespace semlift::search {
namespace {

using rdf::Term;
using testing::BruteForce;
using testing::Fixture;
using testing::cat;
using testing::data;
using testing::fixture;
using testing::fixture_facets;
using testing::is_subset;
using testing::kCat;
using testing::kData;
using testing::kLabelPredicates;
using testing::kOnto;
using testing::onto;
using testing::random_selections;
using testing::scan_complete;
using testing::utf8_prefix;

// Autocomplete

rdf::Graph water_graph() {
  return rdf::parse_turtle(
      "<http://x.org/W> <http://www.w3.org/2000/01/rdf-schema#label> \"water\"@en, \"Wasser\"@de .");
}

TEST(AutocompleteTest, BuildsOneEntryPerLabelTriple) {
  AutocompleteIndex idx = AutocompleteIndex::build(water_graph(), {std::string(vocab::kRdfsLabel)});
  ASSERT_EQ(idx.size(), 2U);
  for (const LexicalEntry& e : idx.entries()) EXPECT_EQ(e.concept_iri, "http://x.org/W");
  EXPECT_EQ(AutocompleteIndex::build(rdf::Graph{}, kLabelPredicates).size(), 0U);
}

TEST(AutocompleteTest, PrefixHitsLeadConceptSynonymsFollow) {
  AutocompleteIndex idx = AutocompleteIndex::build(water_graph(), {std::string(vocab::kRdfsLabel)});
  auto wat = idx.complete("wat", 1);
  ASSERT_EQ(wat.size(), 1U);
  EXPECT_EQ(wat[0].surface, "water");
  EXPECT_EQ(wat[0].language, "en");
  EXPECT_DOUBLE_EQ(wat[0].score, 0.6);

  auto was = idx.complete("was", 10);
  ASSERT_EQ(was.size(), 2U);
  EXPECT_EQ(was[0].surface, "Wasser");
  EXPECT_EQ(was[0].language, "de");
  EXPECT_DOUBLE_EQ(was[0].score, 0.5);
  EXPECT_EQ(was[1].surface, "water");
  EXPECT_DOUBLE_EQ(was[1].score, 0.0);
  EXPECT_EQ(was[0].concept_iri, was[1].concept_iri);

  EXPECT_TRUE(idx.complete("  ", 5).empty());
  EXPECT_TRUE(idx.complete("xyz", 5).empty());
  EXPECT_THROW(idx.complete("w", 0), QueryError);
}

TEST(AutocompleteTest, QueryIsNormalized) {
  AutocompleteIndex idx = AutocompleteIndex::build(fixture().graph, kLabelPredicates);
  auto hits = idx.complete("ESSIGSAU", 5);
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits[0].surface, "Essigsäure");
  EXPECT_EQ(hits[0].concept_iri, kData + "aceticAcid");
}

rdf::Graph labels100() { return rdf::parse_turtle(testing::read_fixture("search/labels100.ttl")); }

TEST(AutocompleteTest, HundredLabelFixtureCountMatchesTriples) {
  rdf::Graph g = labels100();
  std::size_t expected = 0;
  for (const std::string& p : kLabelPredicates) expected += g.match(std::nullopt, Term::iri(p), std::nullopt).size();
  EXPECT_EQ(expected, 100U);
  EXPECT_EQ(AutocompleteIndex::build(g, kLabelPredicates).size(), expected);
}

TEST(AutocompleteTest, RandomPrefixesMatchLinearScan) {
  rdf::Graph g = labels100();
  AutocompleteIndex idx = AutocompleteIndex::build(g, kLabelPredicates);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const LexicalEntry& e = idx.entries()[rng() % idx.size()];
    const std::string& source = trial % 2 == 0 ? e.surface : e.normalized;
    std::string q = utf8_prefix(source, 1 + rng() % text::codepoint_length(source));
    std::size_t limit = 1 + rng() % 15;
    auto got = idx.complete(q, limit);
    auto want = scan_complete(g, q, limit);
    ASSERT_EQ(got.size(), want.size()) << "query '" << q << "'";
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].surface, want[i].surface) << q;
      EXPECT_EQ(got[i].concept_iri, want[i].concept_iri) << q;
      EXPECT_EQ(got[i].language, want[i].language) << q;
      EXPECT_DOUBLE_EQ(got[i].score, want[i].score) << q;
    }
  }
}

TEST(AutocompleteTest, EveryEntryReachableByItsFullForm) {
  AutocompleteIndex idx = AutocompleteIndex::build(labels100(), kLabelPredicates);
  for (const LexicalEntry& e : idx.entries()) {
    auto hits = idx.complete(e.normalized, idx.size());
    bool found = std::any_of(hits.begin(), hits.end(), [&](const Completion& c) {
      return c.surface == e.surface && c.concept_iri == e.concept_iri && c.score > 0;
    });
    EXPECT_TRUE(found) << e.surface;
  }
}

TEST(AutocompleteTest, NormalizationIsIdempotent) {
  AutocompleteIndex idx = AutocompleteIndex::build(labels100(), kLabelPredicates);
  for (const LexicalEntry& e : idx.entries()) {
    EXPECT_EQ(text::normalize(e.normalized), e.normalized);
    EXPECT_EQ(e.normalized, text::normalize(e.surface));
  }
}

// Faceted search

TEST(FacetTest, KindNamesRoundTrip) {
  for (FacetKind k : {FacetKind::kClassHierarchy, FacetKind::kPropertyValue, FacetKind::kCategory}) {
    EXPECT_EQ(facet_kind_from_name(facet_kind_name(k)), k);
  }
  EXPECT_THROW(facet_kind_from_name("tree"), QueryError);
}

TEST(FacetTest, ValidatesDefinitions) {
  const Fixture& f = fixture();
  EXPECT_THROW(SearchEngine(f.graph, f.ontology, {{"x", FacetKind::kClassHierarchy, kOnto + "Nothing", ""}}, {}),
               QueryError);
  EXPECT_THROW(SearchEngine(f.graph, f.ontology,
                            {{"x", FacetKind::kClassHierarchy, kOnto + "Acid", ""},
                             {"x", FacetKind::kClassHierarchy, kOnto + "Role", ""}},
                            {}),
               QueryError);
  EXPECT_THROW(f.engine.evaluate({{"colour", {onto("Acid")}}}), QueryError);
}

TEST(FacetTest, EmptySelectionsReturnAllTypedEntities) {
  EXPECT_EQ(fixture().engine.universe().size(), 20U);
  EXPECT_EQ(fixture().engine.evaluate({}).size(), 20U);
  EXPECT_EQ(fixture().engine.evaluate({{"class", {}}}).size(), 20U);

  rdf::Graph g = rdf::parse_turtle(
      "@prefix o: <http://example.org/search/onto#> . <http://a> a o:Acid . <http://b> a o:Alcohol . "
      "<http://c> a o:Alcohol . <http://c> o:phase \"gas\" .");
  auto facets = fixture_facets();
  facets.resize(2);
  SearchEngine small(g, fixture().ontology, facets, kLabelPredicates);
  EXPECT_EQ(small.evaluate({}).size(), 3U);
  EXPECT_TRUE(small.evaluate({{"class", {onto("Acid")}}, {"role", {onto("Fuel")}}}).empty());
}

TEST(FacetTest, HierarchySemantics) {
  const SearchEngine& e = fixture().engine;
  EXPECT_EQ(e.evaluate({{"class", {onto("Alcohol")}}}),
            (std::vector<Term>{data("butan2ol"), data("ethanol"), data("glycerol"), data("isopropanol"),
                               data("methanol"), data("propanol")}));
  EXPECT_EQ(e.evaluate({{"class", {onto("Compound")}}}).size(), 20U);
  EXPECT_EQ(e.evaluate({{"topic", {cat("OrganicChemistry")}}, {"phase", {Term::literal("solid")}}}),
            (std::vector<Term>{data("citricAcid"), data("naphthalene")}));
  EXPECT_EQ(e.evaluate({{"class", {onto("Alkane"), onto("MineralAcid")}}, {"phase", {Term::literal("gas")}}}),
            (std::vector<Term>{data("ethane"), data("hydrogenChloride"), data("methane"), data("propane")}));
}

TEST(FacetTest, RandomCombinationsMatchBruteForce) {
  const Fixture& f = fixture();
  BruteForce oracle(f);
  ASSERT_EQ(oracle.universe(), f.engine.universe());
  std::mt19937 rng(25);
  for (int trial = 0; trial < 25; ++trial) {
    auto selections = random_selections(rng, 3);
    EXPECT_EQ(f.engine.evaluate(selections), oracle.evaluate(selections)) << "trial " << trial;
  }
}

TEST(FacetTest, MonotoneNarrowing) {
  const SearchEngine& e = fixture().engine;
  std::mt19937 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    FacetState s = e.state(random_selections(rng, 3));
    std::vector<FilterSelection> extra;
    while (extra.empty()) extra = random_selections(rng, 1);
    FacetState next = e.refine(s, extra.front());
    EXPECT_TRUE(is_subset(next.results, s.results)) << "trial " << trial;
    EXPECT_EQ(next.step, s.step + 1);
  }
}

TEST(FacetTest, OrderIndependence) {
  const SearchEngine& e = fixture().engine;
  std::mt19937 rng(501);
  for (int trial = 0; trial < 500; ++trial) {
    auto selections = random_selections(rng, 4);
    auto base = e.evaluate(selections);
    std::shuffle(selections.begin(), selections.end(), rng);
    EXPECT_EQ(e.evaluate(selections), base) << "trial " << trial;
  }
}

struct Expected {
  std::string facet;
  Term value;
  std::size_t count;
  Origin origin;
  std::string via;
  std::string from;
};

void expect_suggestions(const std::vector<FacetSuggestion>& got, const std::vector<Expected>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].facet, want[i].facet) << i;
    EXPECT_EQ(got[i].value, want[i].value) << i;
    EXPECT_EQ(got[i].count, want[i].count) << i;
    EXPECT_EQ(got[i].origin, want[i].origin) << i;
    EXPECT_EQ(got[i].via, want[i].via) << i;
    EXPECT_EQ(got[i].from, want[i].from) << i;
  }
}

TEST(SuggestTest, CountsOrderClassValues) {
  rdf::Graph g = rdf::parse_turtle(
      "@prefix o: <http://example.org/search/onto#> . <http://a> a o:Acid . <http://b> a o:Alcohol . "
      "<http://c> a o:Alcohol .");
  SearchEngine small(g, fixture().ontology, {{"class", FacetKind::kClassHierarchy, kOnto + "Compound", ""}},
                     kLabelPredicates);
  expect_suggestions(small.suggest(small.state({})), {{"class", onto("Alcohol"), 2, Origin::kDirect, "", ""},
                                                      {"class", onto("Acid"), 1, Origin::kDirect, "", ""}});
}

TEST(SuggestTest, SelectedValueNotRepeated) {
  const SearchEngine& e = fixture().engine;
  FacetState s = e.state({{"class", {onto("Alcohol")}}});
  expect_suggestions(e.suggest(s), {
                                       {"phase", Term::literal("liquid"), 6, Origin::kDirect, "", ""},
                                       {"topic", cat("Alcohols"), 6, Origin::kDirect, "", ""},
                                       {"topic", cat("OrganicChemistry"), 6, Origin::kDirect, "", ""},
                                       {"role", onto("Solvent"), 4, Origin::kDirect, "", ""},
                                       {"class", onto("PrimaryAlcohol"), 3, Origin::kDirect, "", ""},
                                       {"class", onto("SecondaryAlcohol"), 2, Origin::kDirect, "", ""},
                                       {"role", onto("Fuel"), 2, Origin::kDirect, "", ""},
                                       {"role", onto("Preservative"), 1, Origin::kDirect, "", ""},
                                   });
}

TEST(SuggestTest, ThreeLevelTreeIncludesExpandedParents) {
  const SearchEngine& e = fixture().engine;
  FacetState s = e.state({{"phase", {Term::literal("gas")}}});
  expect_suggestions(e.suggest(s),
                     {
                         {"class", onto("Alkane"), 3, Origin::kDirect, "", ""},
                         {"class", onto("Hydrocarbon"), 3, Origin::kHierarchyExpanded, "parent", kOnto + "Alkane"},
                         {"role", onto("Fuel"), 3, Origin::kDirect, "", ""},
                         {"topic", cat("Hydrocarbons"), 3, Origin::kDirect, "", ""},
                         {"topic", cat("OrganicChemistry"), 3, Origin::kDirect, "", ""},
                         {"class", onto("Acid"), 1, Origin::kHierarchyExpanded, "parent", kOnto + "MineralAcid"},
                         {"class", onto("MineralAcid"), 1, Origin::kDirect, "", ""},
                         {"topic", cat("InorganicChemistry"), 1, Origin::kDirect, "", ""},
                     });
}

TEST(SuggestTest, SiblingExpansionFromSelectedClass) {
  const SearchEngine& e = fixture().engine;
  FacetState s = e.state({{"class", {onto("Hydrocarbon")}}, {"role", {onto("Solvent")}}});
  auto got = e.suggest(s);
  // Hexane, benzene, toluene. Acid and Alcohol are siblings of Hydrocarbon with no match.
  auto it = std::find_if(got.begin(), got.end(), [](const FacetSuggestion& x) { return x.origin != Origin::kDirect; });
  EXPECT_EQ(it, got.end());
  FacetState t = e.state({{"class", {onto("PrimaryAlcohol")}}, {"phase", {Term::literal("liquid")}}});
  std::vector<FacetSuggestion> class_only;
  for (const FacetSuggestion& x : e.suggest(t)) {
    if (x.facet == "class") class_only.push_back(x);
  }
  expect_suggestions(class_only, {{"class", onto("Alcohol"), 3, Origin::kHierarchyExpanded, "parent",
                                   kOnto + "PrimaryAlcohol"}});
}

TEST(SuggestTest, KeywordKeepsHierarchyRelatives) {
  const SearchEngine& e = fixture().engine;
  FacetState s = e.state({{"phase", {Term::literal("gas")}}});
  expect_suggestions(e.suggest(s, "ALK"),
                     {
                         {"class", onto("Alkane"), 3, Origin::kDirect, "", ""},
                         {"class", onto("Hydrocarbon"), 3, Origin::kHierarchyExpanded, "parent", kOnto + "Alkane"},
                     });
}

TEST(SuggestTest, SuggestionsAreSound) {
  const SearchEngine& e = fixture().engine;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    FacetState s = e.state(random_selections(rng, 2));
    for (const FacetSuggestion& x : e.suggest(s)) {
      ASSERT_GE(x.count, 1U);
      FacetState next = e.refine(s, {x.facet, {x.value}});
      EXPECT_EQ(next.results.size(), x.count) << x.facet << " " << x.value.ntriples();
      for (const FilterSelection& sel : s.selections) {
        if (sel.facet == x.facet) EXPECT_EQ(std::count(sel.values.begin(), sel.values.end(), x.value), 0);
      }
    }
  }
}

TEST(SuggestTest, LabelsPreferEnglish) {
  const SearchEngine& e = fixture().engine;
  EXPECT_EQ(e.label(data("aceticAcid")), "acetic acid");
  EXPECT_EQ(e.label(onto("Acid")), "acid");
  EXPECT_EQ(e.label(cat("Aromatics")), kCat + "Aromatics");
  EXPECT_EQ(e.label(Term::literal("gas")), "gas");
  EXPECT_EQ(e.types(data("water")), (std::vector<std::string>{kOnto + "Compound", kOnto + "Solvent"}));
}

}  // namespace
}  // namespace semlift::search
