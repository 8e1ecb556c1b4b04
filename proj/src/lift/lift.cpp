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

#include "semlift/lift/lift.hpp"

#include <set>

#include "semlift/rdf/term.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::lift {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
char to_upper(char c) { return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

std::string capitalized(const std::string& word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out += i == 0 ? to_upper(word[i]) : to_lower(word[i]);
  return out;
}

std::string lowered(const std::string& word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) out += to_lower(c);
  return out;
}

bool ends_with_separator(std::string_view ns) {
  return !ns.empty() && (ns.back() == '/' || ns.back() == '#');
}

}  // namespace

void LiftConfig::validate() const {
  for (const std::string* ns : {&lifting_namespace, &instance_namespace}) {
    if (!rdf::Iri::is_valid(*ns) || !ends_with_separator(*ns)) {
      throw ValidationError("namespace must be an absolute IRI ending in '/' or '#': '" + *ns + "'");
    }
  }
  if (document_id.empty()) throw ValidationError("document id must not be empty");
  if (!rdf::Iri::is_valid(instance_namespace + document_id)) {
    throw ValidationError("document id does not form a valid IRI: '" + document_id + "'");
  }
}

std::vector<std::string> split_words(std::string_view name) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (c == '-' || c == '_' || c == '.') {
      flush();
      continue;
    }
    if (is_upper(c) && !current.empty()) {
      char prev = current.back();
      char next = i + 1 < name.size() ? name[i + 1] : '\0';
      if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && is_lower(next))) flush();
    }
    current += c;
  }
  flush();
  return words;
}

std::string pascal_case(std::string_view name) {
  std::string out;
  for (const std::string& w : split_words(name)) out += capitalized(w);
  return out.empty() ? std::string(name) : out;
}

std::string camel_case(std::string_view name) {
  std::string out;
  bool first = true;
  for (const std::string& w : split_words(name)) {
    out += first ? lowered(w) : capitalized(w);
    first = false;
  }
  return out.empty() ? std::string(name) : out;
}

DerivedOntology lift_schema(const XmlSchemaModel& schema, const LiftConfig& config) {
  config.validate();
  schema.validate();

  DerivedOntology onto;
  const std::string& ns = config.lifting_namespace;
  onto.lifting_namespace = ns;
  onto.iri = ns.substr(0, ns.size() - 1);
  onto.schema = schema;

  std::set<std::string> used;
  auto claim = [&used](const std::string& local) {
    if (used.insert(local).second) return local;
    for (int k = 2;; ++k) {
      std::string candidate = local + "_" + std::to_string(k);
      if (used.insert(candidate).second) return candidate;
    }
  };

  for (const ElementDecl& e : schema.elements) {
    if (e.is_complex()) onto.classes.push_back({ns + claim(pascal_case(e.name)), e.name});
  }
  for (const ElementDecl& e : schema.elements) {
    if (!e.is_complex()) continue;
    const std::string domain = onto.class_for(e.name)->iri;
    for (const AttrDecl& a : e.complex().attributes) {
      std::string iri = ns + claim(camel_case(e.name) + "_" + camel_case(a.name));
      onto.datatype_properties.push_back({iri, a.name, domain, a.type, e.name, a.name, true});
    }
    for (const ElementRef& ref : e.complex().children) {
      const ElementDecl* child = schema.find(ref.name);
      if (child->is_complex()) {
        std::string iri = ns + claim("has" + pascal_case(child->name));
        onto.object_properties.push_back(
            {iri, child->name, domain, onto.class_for(child->name)->iri, e.name, child->name});
      } else {
        std::string iri = ns + claim(camel_case(e.name) + "_" + camel_case(child->name));
        onto.datatype_properties.push_back({iri, child->name, domain, child->simple(), e.name, child->name, false});
      }
    }
  }
  return onto;
}

const DerivedClass* DerivedOntology::class_for(std::string_view element) const {
  for (const DerivedClass& c : classes) {
    if (c.label == element) return &c;
  }
  return nullptr;
}

const DerivedDatatypeProperty* DerivedOntology::attribute_property(std::string_view element,
                                                                   std::string_view attr) const {
  for (const auto& p : datatype_properties) {
    if (p.from_attribute && p.owner == element && p.name == attr) return &p;
  }
  return nullptr;
}

const DerivedDatatypeProperty* DerivedOntology::child_property(std::string_view element,
                                                               std::string_view child) const {
  for (const auto& p : datatype_properties) {
    if (!p.from_attribute && p.owner == element && p.name == child) return &p;
  }
  return nullptr;
}

const DerivedObjectProperty* DerivedOntology::object_property(std::string_view element,
                                                              std::string_view child) const {
  for (const auto& p : object_properties) {
    if (p.owner == element && p.child == child) return &p;
  }
  return nullptr;
}

rdf::Graph DerivedOntology::to_graph() const {
  using rdf::Term;
  rdf::Graph g;
  const Term type = Term::iri(std::string(vocab::kRdfType));
  const Term label = Term::iri(std::string(vocab::kRdfsLabel));
  const Term domain = Term::iri(std::string(vocab::kRdfsDomain));
  const Term range = Term::iri(std::string(vocab::kRdfsRange));

  g.insert(Term::iri(iri), type, Term::iri(std::string(vocab::kOwlOntology)));
  for (const DerivedClass& c : classes) {
    g.insert(Term::iri(c.iri), type, Term::iri(std::string(vocab::kOwlClass)));
    g.insert(Term::iri(c.iri), label, Term::literal(c.label));
  }
  for (const auto& p : datatype_properties) {
    g.insert(Term::iri(p.iri), type, Term::iri(std::string(vocab::kOwlDatatypeProperty)));
    g.insert(Term::iri(p.iri), label, Term::literal(p.label));
    g.insert(Term::iri(p.iri), domain, Term::iri(p.domain));
    g.insert(Term::iri(p.iri), range, Term::iri(std::string(datatype_iri(p.range))));
  }
  for (const auto& p : object_properties) {
    g.insert(Term::iri(p.iri), type, Term::iri(std::string(vocab::kOwlObjectProperty)));
    g.insert(Term::iri(p.iri), label, Term::literal(p.label));
    g.insert(Term::iri(p.iri), domain, Term::iri(p.domain));
    g.insert(Term::iri(p.iri), range, Term::iri(p.range));
  }
  g.prefixes() = prefixes();
  return g;
}

rdf::PrefixMap DerivedOntology::prefixes() const {
  return {{"", lifting_namespace},
          {"owl", std::string(vocab::kOwl)},
          {"rdfs", std::string(vocab::kRdfs)},
          {"xsd", std::string(vocab::kXsd)}};
}

std::string DerivedOntology::review_report() const {
  std::string out;
  for (const DerivedClass& c : classes) out += "class\t" + c.iri + "\telement " + c.label + "\n";
  for (const auto& p : datatype_properties) {
    out += "datatype-property\t" + p.iri + "\t" + (p.from_attribute ? "attribute " : "child element ") +
           p.owner + (p.from_attribute ? "/@" : "/") + p.name + "\tdomain " + p.domain + "\trange xsd:" +
           std::string(type_name(p.range)) + "\n";
  }
  for (const auto& p : object_properties) {
    out += "object-property\t" + p.iri + "\tchild element " + p.owner + "/" + p.child + "\tdomain " +
           p.domain + "\trange " + p.range + "\n";
  }
  return out;
}

}  // namespace semlift::lift
