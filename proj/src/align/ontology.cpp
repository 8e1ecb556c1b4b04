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

#include "semlift/align/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "semlift/rdf/turtle.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::align {
namespace {

namespace fs = std::filesystem;
using rdf::Term;

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

std::vector<Label> labels_of(const rdf::Graph& g, const Term& subject) {
  std::vector<Label> out;
  for (std::string_view p : {vocab::kRdfsLabel, vocab::kSkosPrefLabel, vocab::kSkosAltLabel}) {
    for (const Term& o : g.objects(subject, iri(p))) {
      if (!o.is_literal()) continue;
      out.push_back({o.as_literal().lexical(), o.as_literal().language().value_or("")});
    }
  }
  return out;
}

void add_labels(std::vector<Label>& into, std::vector<Label> more) {
  into.insert(into.end(), more.begin(), more.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

bool is_datatype_range(const rdf::Graph& g, const Term& property) {
  for (const Term& r : g.objects(property, iri(vocab::kRdfsRange))) {
    if (!r.is_iri()) continue;
    const std::string& v = r.as_iri().str();
    if (v.rfind(vocab::kXsd, 0) == 0 || v == std::string(vocab::kRdfs) + "Literal" ||
        v == vocab::kRdfLangString) {
      return true;
    }
  }
  return false;
}

void collect(Ontology& onto, const rdf::Graph& g) {
  const Term type = iri(vocab::kRdfType);
  auto declare_class = [&](const Term& c) {
    if (!c.is_iri()) return;
    ClassDecl& decl = onto.classes[c.as_iri().str()];
    decl.iri = c.as_iri().str();
    add_labels(decl.labels, labels_of(g, c));
  };
  for (std::string_view k : {vocab::kOwlClass, vocab::kRdfsClass}) {
    for (const Term& c : g.subjects(type, iri(k))) declare_class(c);
  }
  for (const rdf::Triple& t : g.match(std::nullopt, iri(vocab::kRdfsSubClassOf), std::nullopt)) {
    declare_class(t.subject());
    declare_class(t.object());
    if (t.subject().is_iri() && t.object().is_iri()) {
      onto.subclass_of.emplace(t.subject().as_iri().str(), t.object().as_iri().str());
    }
  }
  const std::pair<std::string_view, std::optional<PropertyKind>> property_types[] = {
      {vocab::kOwlDatatypeProperty, PropertyKind::kDatatype},
      {vocab::kOwlObjectProperty, PropertyKind::kObject},
      {"http://www.w3.org/2002/07/owl#AnnotationProperty", std::nullopt},
      {vocab::kRdfProperty, std::nullopt}};
  for (const auto& [k, kind] : property_types) {
    for (const Term& p : g.subjects(type, iri(k))) {
      if (!p.is_iri()) continue;
      auto [it, fresh] = onto.properties.try_emplace(p.as_iri().str());
      PropertyDecl& decl = it->second;
      decl.iri = p.as_iri().str();
      if (kind) {
        decl.kind = *kind;
      } else if (fresh) {
        decl.kind = is_datatype_range(g, p) ? PropertyKind::kDatatype : PropertyKind::kObject;
      }
      add_labels(decl.labels, labels_of(g, p));
    }
  }
  for (const rdf::Triple& t : g.match(std::nullopt, iri(vocab::kRdfsSubPropertyOf), std::nullopt)) {
    if (t.subject().is_iri() && t.object().is_iri()) {
      onto.subproperty_of.emplace(t.subject().as_iri().str(), t.object().as_iri().str());
    }
  }
  onto.graph.merge(g);
}

// Depth-first search for a subclass cycle; returns it as "a -> b -> a".
std::string find_subclass_cycle(const Ontology& onto) {
  std::map<std::string, int> state;  // 1 on stack, 2 done
  std::vector<std::string> stack;
  std::string cycle;
  std::function<bool(const std::string&)> visit = [&](const std::string& c) {
    state[c] = 1;
    stack.push_back(c);
    for (const std::string& s : onto.direct_superclasses(c)) {
      if (state[s] == 1) {
        auto from = std::find(stack.begin(), stack.end(), s);
        for (auto it = from; it != stack.end(); ++it) cycle += *it + " -> ";
        cycle += s;
        return true;
      }
      if (state[s] == 0 && visit(s)) return true;
    }
    stack.pop_back();
    state[c] = 2;
    return false;
  };
  for (const auto& [c, decl] : onto.classes) {
    if (state[c] == 0 && visit(c)) return cycle;
  }
  return "";
}

void check_acyclic(const Ontology& onto) {
  std::string cycle = find_subclass_cycle(onto);
  if (!cycle.empty()) throw OntologyError("subclass cycle: " + cycle);
}

struct Document {
  std::string id;
  fs::path path;
  rdf::Graph graph;
  std::vector<std::string> imports;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OntologyError("cannot read ontology file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document read_document(const fs::path& path) {
  Document doc;
  doc.path = path;
  try {
    doc.graph = rdf::parse_turtle(read_text(path));
  } catch (const ParseError& e) {
    throw OntologyError(path.string() + ": " + e.what());
  }
  std::vector<Term> ids = doc.graph.subjects(iri(vocab::kRdfType), iri(vocab::kOwlOntology));
  if (ids.size() > 1) throw OntologyError(path.string() + ": more than one owl:Ontology header");
  if (!ids.empty() && ids[0].is_iri()) {
    doc.id = ids[0].as_iri().str();
    for (const Term& o : doc.graph.objects(ids[0], iri(vocab::kOwlImports))) {
      if (o.is_iri()) doc.imports.push_back(o.as_iri().str());
    }
  }
  return doc;
}

}  // namespace

std::set<std::string> Ontology::direct_superclasses(const std::string& c) const {
  std::set<std::string> out;
  for (auto it = subclass_of.lower_bound({c, ""}); it != subclass_of.end() && it->first == c; ++it) {
    out.insert(it->second);
  }
  return out;
}

std::set<std::string> Ontology::direct_subclasses(const std::string& c) const {
  std::set<std::string> out;
  for (const auto& [sub, super] : subclass_of) {
    if (super == c) out.insert(sub);
  }
  return out;
}

std::set<std::string> Ontology::ancestors(const std::string& c) const {
  std::set<std::string> seen;
  std::vector<std::string> todo{c};
  while (!todo.empty()) {
    std::string x = std::move(todo.back());
    todo.pop_back();
    for (const std::string& s : direct_superclasses(x)) {
      if (s != c && seen.insert(s).second) todo.push_back(s);
    }
  }
  return seen;
}

std::set<std::string> Ontology::descendants(const std::string& c) const {
  std::set<std::string> seen;
  std::vector<std::string> todo{c};
  while (!todo.empty()) {
    std::string x = std::move(todo.back());
    todo.pop_back();
    for (const std::string& s : direct_subclasses(x)) {
      if (s != c && seen.insert(s).second) todo.push_back(s);
    }
  }
  return seen;
}

Ontology ontology_from_graph(const rdf::Graph& g) {
  Ontology onto;
  std::vector<Term> ids = g.subjects(iri(vocab::kRdfType), iri(vocab::kOwlOntology));
  if (!ids.empty() && ids[0].is_iri()) {
    onto.id = ids[0].as_iri().str();
    onto.documents.push_back(onto.id);
    for (const Term& o : g.objects(ids[0], iri(vocab::kOwlImports))) {
      if (o.is_iri()) onto.imports.push_back(o.as_iri().str());
    }
  }
  collect(onto, g);
  check_acyclic(onto);
  return onto;
}

Ontology load_ontology(const std::vector<fs::path>& files, const std::vector<fs::path>& import_dirs) {
  std::vector<Document> roots;
  std::map<std::string, Document> catalog;
  for (const fs::path& f : files) {
    roots.push_back(read_document(f));
    if (!roots.back().id.empty()) catalog.emplace(roots.back().id, roots.back());
  }
  for (const fs::path& dir : import_dirs) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw OntologyError("import directory not found: " + dir.string());
    std::vector<fs::path> entries;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".ttl") entries.push_back(e.path());
    }
    std::sort(entries.begin(), entries.end());
    for (const fs::path& p : entries) {
      Document d = read_document(p);
      if (!d.id.empty()) catalog.emplace(d.id, std::move(d));  // earlier entries win
    }
  }

  Ontology onto;
  std::set<std::string> done;
  std::vector<std::string> stack;
  std::function<void(const Document&)> visit = [&](const Document& d) {
    if (!d.id.empty()) {
      auto on_stack = std::find(stack.begin(), stack.end(), d.id);
      if (on_stack != stack.end()) {
        std::string cycle;
        for (auto it = on_stack; it != stack.end(); ++it) cycle += *it + " -> ";
        throw OntologyError("import cycle: " + cycle + d.id);
      }
      if (done.count(d.id)) return;
      stack.push_back(d.id);
    }
    for (const std::string& imp : d.imports) {
      auto it = catalog.find(imp);
      if (it == catalog.end()) throw OntologyError("missing import: " + imp + " (imported by " + d.id + ")");
      visit(it->second);
    }
    collect(onto, d.graph);
    if (!d.id.empty()) {
      stack.pop_back();
      done.insert(d.id);
      onto.documents.push_back(d.id);
    }
  };
  for (const Document& d : roots) {
    if (onto.id.empty()) onto.id = d.id;
    onto.imports.insert(onto.imports.end(), d.imports.begin(), d.imports.end());
    visit(d);
  }
  check_acyclic(onto);
  return onto;
}

}  // namespace semlift::align
