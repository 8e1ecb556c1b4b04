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

#include "semlift/error.hpp"
#include "semlift/rdf/term.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::rdf {
namespace {

TEST(IriTest, AcceptsAbsoluteIris) {
  EXPECT_TRUE(Iri::is_valid("http://example.org/a"));
  EXPECT_TRUE(Iri::is_valid("urn:isbn:0451450523"));
  EXPECT_TRUE(Iri::is_valid("http://\xE4\xBE\x8B\xE3\x81\x88.jp/\xC3\xA4"));
}

TEST(IriTest, RejectsRelativeAndForbiddenCharacters) {
  EXPECT_FALSE(Iri::is_valid("example"));
  EXPECT_FALSE(Iri::is_valid(":foo"));
  EXPECT_FALSE(Iri::is_valid("1http://x"));
  EXPECT_FALSE(Iri::is_valid("http://x/a b"));
  EXPECT_FALSE(Iri::is_valid("http://x/<a>"));
  EXPECT_FALSE(Iri::is_valid("http://x/\"q\""));
  EXPECT_FALSE(Iri::is_valid("http://x/{a}"));
  EXPECT_THROW(Iri("not an iri"), ValidationError);
}

TEST(IriTest, ComparesExactly) {
  EXPECT_NE(Iri("http://x/A"), Iri("http://x/a"));
  EXPECT_NE(Iri("http://x/%41"), Iri("http://x/A"));
}

TEST(LiteralTest, DefaultsToXsdString) {
  Literal lit("v");
  EXPECT_EQ(lit.datatype().str(), vocab::kXsdString);
  EXPECT_FALSE(lit.language().has_value());
  EXPECT_EQ(Term(lit), Term::literal("v", vocab::kXsdString));
}

TEST(LiteralTest, LanguageImpliesLangString) {
  Literal lit = Literal::tagged("Wasser", "DE");
  EXPECT_EQ(lit.datatype().str(), vocab::kRdfLangString);
  EXPECT_EQ(lit.language(), "de");
  EXPECT_EQ(Term(lit).ntriples(), "\"Wasser\"@de");
  EXPECT_THROW(Literal("x", Iri(std::string(vocab::kRdfLangString))), ValidationError);
  EXPECT_THROW(Literal::tagged("x", "e n"), ValidationError);
  EXPECT_THROW(Literal::tagged("x", ""), ValidationError);
}

TEST(TermTest, RendersCanonicalNTriples) {
  EXPECT_EQ(Term::iri("http://x/a").ntriples(), "<http://x/a>");
  EXPECT_EQ(Term::blank("b1").ntriples(), "_:b1");
  EXPECT_EQ(Term::literal("a\"b\\c\nd\re\tf").ntriples(), "\"a\\\"b\\\\c\\nd\\re\\u0009f\"");
  EXPECT_EQ(Term::literal("5", vocab::kXsdInteger).ntriples(),
            "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
}

TEST(TermTest, BlankLabelsAreRestricted) {
  EXPECT_THROW(Term::blank("a-b"), ValidationError);
  EXPECT_THROW(Term::blank(""), ValidationError);
  EXPECT_NO_THROW(Term::blank("A_9"));
}

TEST(TripleTest, RejectsLiteralSubjectAndNonIriPredicate) {
  EXPECT_THROW(Triple(Term::literal("x"), Term::iri("http://x/p"), Term::iri("http://x/o")),
               ValidationError);
  EXPECT_THROW(Triple(Term::iri("http://x/s"), Term::blank("p"), Term::iri("http://x/o")),
               ValidationError);
  Triple t(Term::blank("s"), Term::iri("http://x/p"), Term::literal("o"));
  EXPECT_EQ(t.ntriples(), "_:s <http://x/p> \"o\" .");
}

}  // namespace
}  // namespace semlift::rdf
