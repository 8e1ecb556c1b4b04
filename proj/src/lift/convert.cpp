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

#include <map>

#include "semlift/lift/lift.hpp"
#include "semlift/rdf/term.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::lift {
namespace {

constexpr std::string_view kXsiNamespace = "http://www.w3.org/2001/XMLSchema-instance";

bool is_whitespace_only(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
  }
  return true;
}

class Converter {
 public:
  Converter(const DerivedOntology& onto, const LiftConfig& config)
      : onto_(onto), schema_(onto.schema), config_(config) {}

  rdf::Graph run(const XmlDocument& doc) {
    const XmlElement& root = doc.root;
    std::string path = "/" + root.name + "[1]";
    check_namespace(root, path);
    const ElementDecl* decl = schema_.find(root.name);
    if (decl == nullptr) throw ConversionError(path, "element <" + root.name + "> is not declared in the schema");
    if (decl->is_complex()) {
      complex_element(root, *decl, path);
    } else {
      simple_value(root, *decl, path);
    }
    return std::move(graph_);
  }

 private:
  void check_namespace(const XmlElement& el, const std::string& path) const {
    if (el.namespace_uri != schema_.target_namespace) {
      throw ConversionError(path, "element <" + el.name + "> in foreign namespace '" + el.namespace_uri + "'");
    }
  }

  rdf::Term literal(SimpleType type, std::string_view raw, const std::string& path) const {
    if (!is_valid_lexical(type, raw)) {
      throw ConversionError(path, "\"" + std::string(raw) + "\" is not a valid xs:" + std::string(type_name(type)));
    }
    std::string lexical = lexical_form(type, raw);
    if (type == SimpleType::kString) return rdf::Term::literal(std::move(lexical));
    return rdf::Term::literal(std::move(lexical), datatype_iri(type));
  }

  void simple_value(const XmlElement& el, const ElementDecl& decl, const std::string& path) const {
    for (const XmlAttribute& a : el.attributes) {
      if (a.namespace_uri != kXsiNamespace) {
        throw ConversionError(path + "/@" + a.name, "simple element <" + el.name + "> takes no attributes");
      }
    }
    if (!el.children.empty()) {
      throw ConversionError(path, "simple element <" + el.name + "> must not contain elements");
    }
    literal(decl.simple(), el.text, path);
  }

  rdf::Term mint(const std::string& element) {
    std::size_t ordinal = ++ordinals_[element];
    return rdf::Term::iri(config_.instance_namespace + config_.document_id + "/" + element + "/" +
                          std::to_string(ordinal));
  }

  rdf::Term complex_element(const XmlElement& el, const ElementDecl& decl, const std::string& path) {
    const ComplexContent& content = decl.complex();
    rdf::Term individual = mint(el.name);
    graph_.insert(individual, rdf::Term::iri(std::string(vocab::kRdfType)),
                  rdf::Term::iri(onto_.class_for(el.name)->iri));

    for (const XmlAttribute& a : el.attributes) {
      std::string attr_path = path + "/@" + a.name;
      if (a.namespace_uri == kXsiNamespace) continue;
      if (!a.namespace_uri.empty()) {
        throw ConversionError(attr_path, "attribute in foreign namespace '" + a.namespace_uri + "'");
      }
      const DerivedDatatypeProperty* prop = onto_.attribute_property(el.name, a.name);
      if (prop == nullptr) throw ConversionError(attr_path, "undeclared attribute '" + a.name + "'");
      graph_.insert(individual, rdf::Term::iri(prop->iri), literal(prop->range, a.value, attr_path));
    }
    for (const AttrDecl& a : content.attributes) {
      if (a.required && el.attribute(a.name) == nullptr) {
        throw ConversionError(path, "missing required attribute '" + a.name + "'");
      }
    }
    if (!is_whitespace_only(el.text)) {
      throw ConversionError(path, "unexpected text in complex element <" + el.name + ">");
    }

    check_sequence(el, content, path);

    std::map<std::string, std::size_t> positions;
    for (const XmlElement& child : el.children) {
      std::string child_path = path + "/" + child.name + "[" + std::to_string(++positions[child.name]) + "]";
      const ElementDecl* child_decl = schema_.find(child.name);
      if (child_decl->is_complex()) {
        rdf::Term child_individual = complex_element(child, *child_decl, child_path);
        graph_.insert(individual, rdf::Term::iri(onto_.object_property(el.name, child.name)->iri),
                      child_individual);
      } else {
        simple_value(child, *child_decl, child_path);
        graph_.insert(individual, rdf::Term::iri(onto_.child_property(el.name, child.name)->iri),
                      literal(child_decl->simple(), child.text, child_path));
      }
    }
    return individual;
  }

  // Children must follow the sequence order within their occurrence bounds.
  void check_sequence(const XmlElement& el, const ComplexContent& content, const std::string& path) const {
    const auto& refs = content.children;
    std::size_t k = 0, count = 0;
    std::map<std::string, std::size_t> positions;
    for (const XmlElement& child : el.children) {
      std::string child_path = path + "/" + child.name + "[" + std::to_string(++positions[child.name]) + "]";
      check_namespace(child, child_path);
      while (k < refs.size() && refs[k].name != child.name) {
        if (count < refs[k].min) {
          throw ConversionError(child_path, "expected <" + refs[k].name + "> before <" + child.name + ">");
        }
        ++k;
        count = 0;
      }
      if (k == refs.size()) {
        throw ConversionError(child_path, "element <" + child.name + "> is not allowed here in <" + el.name + ">");
      }
      if (++count > refs[k].max) {
        throw ConversionError(child_path, "too many <" + child.name + "> elements in <" + el.name + ">");
      }
    }
    for (; k < refs.size(); ++k, count = 0) {
      if (count < refs[k].min) throw ConversionError(path, "missing required element <" + refs[k].name + ">");
    }
  }

  const DerivedOntology& onto_;
  const XmlSchemaModel& schema_;
  const LiftConfig& config_;
  std::map<std::string, std::size_t> ordinals_;
  rdf::Graph graph_;
};

}  // namespace

rdf::Graph convert_instance(const XmlDocument& doc, const DerivedOntology& ontology, const LiftConfig& config) {
  config.validate();
  return Converter(ontology, config).run(doc);
}

}  // namespace semlift::lift
