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

#include <map>

#include "semlift/lift/lift.hpp"
#include "semlift/rdf/ntriples.hpp"
#include "semlift/rdf/turtle.hpp"
#include "semlift/rdf/vocab.hpp"
#include "support/files.hpp"

namespace semlift::lift {
namespace {

const LiftConfig kConfig{"http://example.org/onto#", "http://example.org/inst/", "d1"};
const LiftConfig kThermoConfig{"http://example.org/thermo/onto#", "http://example.org/thermo/data/", "d1"};

XmlSchemaModel compound_schema() {
  XmlSchemaModel s;
  s.target_namespace = "";
  s.elements = {{"compound", ComplexContent{{{"name", 0, 1}}, {}}}, {"name", SimpleType::kString}};
  return s;
}

TEST(CasingTest, SplitsOnSeparatorsAndCaseBoundaries) {
  EXPECT_EQ(split_words("casNumber"), (std::vector<std::string>{"cas", "Number"}));
  EXPECT_EQ(split_words("XMLFile"), (std::vector<std::string>{"XML", "File"}));
  EXPECT_EQ(split_words("point-count.v2_x"), (std::vector<std::string>{"point", "count", "v2", "x"}));
  EXPECT_EQ(pascal_case("measurement"), "Measurement");
  EXPECT_EQ(pascal_case("molar-mass"), "MolarMass");
  EXPECT_EQ(pascal_case("CASNumber"), "CasNumber");
  EXPECT_EQ(camel_case("CASNumber"), "casNumber");
  EXPECT_EQ(camel_case("Boiling_Point"), "boilingPoint");
}

TEST(LiftSchemaTest, CompoundWithSimpleNameChild) {
  DerivedOntology o = lift_schema(compound_schema(), kConfig);
  ASSERT_EQ(o.classes.size(), 1u);
  EXPECT_EQ(o.classes[0].iri, "http://example.org/onto#Compound");
  EXPECT_EQ(o.classes[0].label, "compound");
  ASSERT_EQ(o.datatype_properties.size(), 1u);
  const auto& p = o.datatype_properties[0];
  EXPECT_EQ(p.iri, "http://example.org/onto#compound_name");
  EXPECT_EQ(p.domain, "http://example.org/onto#Compound");
  EXPECT_EQ(p.range, SimpleType::kString);
  EXPECT_TRUE(o.object_properties.empty());
}

TEST(LiftSchemaTest, EmptySchemaGivesEmptyOntology) {
  DerivedOntology o = lift_schema(XmlSchemaModel{}, kConfig);
  EXPECT_TRUE(o.classes.empty());
  EXPECT_TRUE(o.datatype_properties.empty());
  EXPECT_TRUE(o.object_properties.empty());
  // Only the ontology header remains.
  EXPECT_EQ(o.to_graph().size(), 1u);
}

TEST(LiftSchemaTest, CollisionsAreSuffixedInDeclarationOrder) {
  XmlSchemaModel s;
  s.elements = {
      {"molar-mass", ComplexContent{{{"unit", 1, 1}}, {{"x", SimpleType::kString, false}}}},
      {"molar_mass", ComplexContent{{{"unit", 1, 1}}, {}}},
      {"MolarMass", ComplexContent{{}, {{"x", SimpleType::kInteger, false}}}},
      {"unit", ComplexContent{}},
  };
  DerivedOntology o = lift_schema(s, kConfig);
  ASSERT_EQ(o.classes.size(), 4u);
  EXPECT_EQ(o.classes[0].iri, "http://example.org/onto#MolarMass");
  EXPECT_EQ(o.classes[1].iri, "http://example.org/onto#MolarMass_2");
  EXPECT_EQ(o.classes[2].iri, "http://example.org/onto#MolarMass_3");
  EXPECT_EQ(o.classes[3].iri, "http://example.org/onto#Unit");
  // molar-mass/@x and MolarMass/@x both case to molarMass_x.
  ASSERT_EQ(o.datatype_properties.size(), 2u);
  EXPECT_EQ(o.datatype_properties[0].iri, "http://example.org/onto#molarMass_x");
  EXPECT_EQ(o.datatype_properties[1].iri, "http://example.org/onto#molarMass_x_2");
  EXPECT_EQ(o.datatype_properties[1].range, SimpleType::kInteger);
  // Two parents share the complex child `unit`.
  ASSERT_EQ(o.object_properties.size(), 2u);
  EXPECT_EQ(o.object_properties[0].iri, "http://example.org/onto#hasUnit");
  EXPECT_EQ(o.object_properties[0].domain, "http://example.org/onto#MolarMass");
  EXPECT_EQ(o.object_properties[1].iri, "http://example.org/onto#hasUnit_2");
  EXPECT_EQ(o.object_properties[1].domain, "http://example.org/onto#MolarMass_2");
}

TEST(LiftSchemaTest, DanglingReferenceIsASchemaError) {
  XmlSchemaModel s;
  s.elements = {{"compound", ComplexContent{{{"missing", 1, 1}}, {}}}};
  try {
    lift_schema(s, kConfig);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
  }
}

TEST(LiftSchemaTest, ConfigNamespacesMustEndWithSeparator) {
  EXPECT_THROW(lift_schema(XmlSchemaModel{}, LiftConfig{"http://x/onto", "http://x/i/", "d"}), ValidationError);
  EXPECT_THROW(lift_schema(XmlSchemaModel{}, LiftConfig{"http://x/o#", "relative/", "d"}), ValidationError);
}

TEST(LiftSchemaTest, ThermoFixtureMatchesGoldenTurtle) {
  DerivedOntology o = lift_schema(parse_schema(testing::read_fixture("thermo/thermo.xsd")), kThermoConfig);
  EXPECT_EQ(rdf::write_turtle(o.to_graph(), o.prefixes()), testing::read_fixture("thermo/ontology.golden.ttl"));
}

TEST(LiftSchemaTest, ReviewReportHasOneLinePerDerivedTerm) {
  DerivedOntology o = lift_schema(parse_schema(testing::read_fixture("thermo/thermo.xsd")), kThermoConfig);
  std::string report = o.review_report();
  std::size_t lines = static_cast<std::size_t>(std::count(report.begin(), report.end(), '\n'));
  EXPECT_EQ(lines, o.classes.size() + o.datatype_properties.size() + o.object_properties.size());
  EXPECT_NE(report.find("class\thttp://example.org/thermo/onto#Citation\telement citation\n"), std::string::npos);
  EXPECT_NE(report.find("datatype-property\thttp://example.org/thermo/onto#measurement_pointCount\tattribute "
                        "measurement/@pointCount\tdomain http://example.org/thermo/onto#Measurement\trange xsd:integer\n"),
            std::string::npos);
}

// --- convert_instance ---

TEST(ConvertTest, CompoundNameExample) {
  DerivedOntology o = lift_schema(compound_schema(), kConfig);
  rdf::Graph g = convert_instance(parse_document("<compound><name>water</name></compound>"), o, kConfig);
  EXPECT_EQ(rdf::write_ntriples(g),
            "<http://example.org/inst/d1/compound/1> <http://example.org/onto#compound_name> \"water\" .\n"
            "<http://example.org/inst/d1/compound/1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
            "<http://example.org/onto#Compound> .\n");
}

TEST(ConvertTest, AbsentOptionalChildEmitsNothing) {
  DerivedOntology o = lift_schema(compound_schema(), kConfig);
  rdf::Graph g = convert_instance(parse_document("<compound>\n  \n</compound>"), o, kConfig);
  EXPECT_EQ(g.size(), 1u);
}

std::string conversion_error(const std::string& xml) {
  DerivedOntology o = lift_schema(parse_schema(testing::read_fixture("thermo/thermo.xsd")), kThermoConfig);
  try {
    convert_instance(parse_document(xml), o, kThermoConfig);
  } catch (const ConversionError& e) {
    return e.location() + " | " + e.what();
  }
  return "";
}

TEST(ConvertTest, InvalidLexicalFormNamesLocation) {
  std::string err = conversion_error(
      "<citation xmlns='http://example.org/thermoml' doi='x'><compound id='a'/><compound id='b'>"
      "<property name='p'><measurement value='1' pointCount='abc'><unit>K</unit></measurement></property>"
      "</compound></citation>");
  EXPECT_EQ(err.substr(0, err.find(" | ")),
            "/citation[1]/compound[2]/property[1]/measurement[1]/@pointCount");
  EXPECT_NE(err.find("\"abc\" is not a valid xs:integer"), std::string::npos) << err;
}

TEST(ConvertTest, StructuralViolations) {
  const std::string open = "<citation xmlns='http://example.org/thermoml' doi='x'>";
  // Foreign namespace.
  EXPECT_NE(conversion_error("<citation xmlns='urn:other' doi='x'/>").find("foreign namespace"), std::string::npos);
  // Missing required child and attribute.
  EXPECT_NE(conversion_error(open + "</citation>").find("missing required element <compound>"), std::string::npos);
  EXPECT_NE(conversion_error("<citation xmlns='http://example.org/thermoml'><compound id='a'/></citation>")
                .find("missing required attribute 'doi'"),
            std::string::npos);
  // Sequence order: method after measurement.
  EXPECT_NE(conversion_error(open + "<compound id='a'><property name='p'><measurement value='1'><unit>K</unit>"
                                    "</measurement><method>m</method></property></compound></citation>")
                .find("not allowed here"),
            std::string::npos);
  // maxOccurs exceeded.
  EXPECT_NE(conversion_error(open + "<compound id='a'><property name='p'><measurement value='1'><unit>K</unit>"
                                    "<unit>K</unit></measurement></property></compound></citation>")
                .find("too many <unit>"),
            std::string::npos);
  // Undeclared attribute and stray text.
  EXPECT_NE(conversion_error(open + "<compound id='a' color='red'/></citation>").find("undeclared attribute"),
            std::string::npos);
  EXPECT_NE(conversion_error(open + "text<compound id='a'/></citation>").find("unexpected text"),
            std::string::npos);
}

rdf::Graph convert_fixture(const DerivedOntology& o, const std::string& id) {
  LiftConfig cfg = kThermoConfig;
  cfg.document_id = id;
  return convert_instance(parse_document(testing::read_fixture("thermo/" + id + ".xml")), o, cfg);
}

TEST(ConvertTest, ThermoCorpusMatchesGoldenNTriples) {
  DerivedOntology o = lift_schema(parse_schema(testing::read_fixture("thermo/thermo.xsd")), kThermoConfig);
  rdf::Graph all;
  for (const char* id : {"d1", "d2", "d3"}) all.merge(convert_fixture(o, id));
  EXPECT_EQ(rdf::write_ntriples(all), testing::read_fixture("thermo/data.golden.nt"));
}

// Counts complex element instances in a document, independently of the
// converter.
std::size_t count_complex(const XmlElement& el, const XmlSchemaModel& s) {
  std::size_t n = s.find(el.name)->is_complex() ? 1 : 0;
  for (const XmlElement& c : el.children) n += count_complex(c, s);
  return n;
}

TEST(ConvertTest, PropertiesOnFixtureCorpus) {
  XmlSchemaModel schema = parse_schema(testing::read_fixture("thermo/thermo.xsd"));
  DerivedOntology o = lift_schema(schema, kThermoConfig);
  const rdf::Term type = rdf::Term::iri(std::string(vocab::kRdfType));
  std::map<std::string, SimpleType> declared_range;
  for (const auto& p : o.datatype_properties) declared_range[p.iri] = p.range;

  for (const char* id : {"d1", "d2", "d3"}) {
    rdf::Graph g = convert_fixture(o, id);
    // Determinism: a second run is byte-identical.
    EXPECT_EQ(rdf::write_ntriples(g), rdf::write_ntriples(convert_fixture(o, id)));

    std::size_t individuals = 0;
    for (const rdf::Term& s : g.all_subjects()) {
      ++individuals;
      EXPECT_EQ(g.objects(s, type).size(), 1u) << s.ntriples();
    }
    XmlDocument doc = parse_document(testing::read_fixture(std::string("thermo/") + id + ".xml"));
    EXPECT_EQ(individuals, count_complex(doc.root, schema));

    for (const rdf::Triple& t : g) {
      if (!t.object().is_literal()) continue;
      auto it = declared_range.find(t.predicate().as_iri().str());
      ASSERT_NE(it, declared_range.end());
      EXPECT_EQ(t.object().as_literal().datatype().str(), datatype_iri(it->second));
    }
  }
}

}  // namespace
}  // namespace semlift::lift
