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

#include "semlift/lift/schema.hpp"

#include <charconv>
#include <set>

#include "semlift/lift/xml.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::lift {
namespace {

constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

bool is_xml_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_xml_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_xml_space(s.back())) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

bool valid_date(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  std::size_t dash = s.find('-');
  if (dash == std::string_view::npos || dash < 4 || !all_digits(s.substr(0, dash))) return false;
  std::string_view rest = s.substr(dash + 1);
  if (rest.size() < 5 || rest[2] != '-') return false;
  std::string_view month = rest.substr(0, 2), day = rest.substr(3, 2);
  if (!all_digits(month) || !all_digits(day)) return false;
  std::string_view tz = rest.substr(5);
  if (!tz.empty() && tz != "Z") {
    if (tz.size() != 6 || (tz[0] != '+' && tz[0] != '-') || tz[3] != ':' || !all_digits(tz.substr(1, 2)) ||
        !all_digits(tz.substr(4, 2))) {
      return false;
    }
    if (to_int(tz.substr(1, 2)) > 14 || to_int(tz.substr(4, 2)) > 59) return false;
  }
  // Years beyond int range are not plausible in this toolkit's inputs.
  if (dash > 9) return false;
  int y = to_int(s.substr(0, dash)), m = to_int(month), d = to_int(day);
  if (m < 1 || m > 12 || d < 1) return false;
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int limit = kDays[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) limit = 29;
  return d <= limit;
}

[[noreturn]] void unsupported(const std::string& what, const XmlElement& at) {
  throw SchemaError("unsupported construct: " + what + " (line " + std::to_string(at.line) + ")");
}

bool is_xsd(const XmlElement& el, std::string_view local) {
  return el.namespace_uri == kXsdNamespace && el.name == local;
}

std::string_view local_part(std::string_view qname) {
  std::size_t colon = qname.find(':');
  return colon == std::string_view::npos ? qname : qname.substr(colon + 1);
}

SimpleType type_attribute(const XmlElement& el, const XmlAttribute& attr) {
  auto t = simple_type_from_name(local_part(attr.value));
  if (!t) unsupported("type " + attr.value, el);
  return *t;
}

// Ensures `el` carries only the listed attributes.
void allow_attributes(const XmlElement& el, std::initializer_list<std::string_view> allowed) {
  for (const XmlAttribute& a : el.attributes) {
    if (!a.namespace_uri.empty()) continue;  // foreign annotations
    bool ok = false;
    for (std::string_view name : allowed) ok = ok || a.name == name;
    if (!ok) unsupported("attribute '" + a.name + "' on xs:" + el.name, el);
  }
}

std::size_t occurs(const XmlElement& el, std::string_view which, std::size_t fallback) {
  const XmlAttribute* a = el.attribute(which);
  if (a == nullptr) return fallback;
  std::string_view v = trim(a->value);
  if (which == "maxOccurs" && v == "unbounded") return kUnbounded;
  if (!all_digits(v)) throw SchemaError("invalid " + std::string(which) + " '" + a->value + "'");
  std::size_t n = 0;
  std::from_chars(v.data(), v.data() + v.size(), n);
  return n;
}

void check_schema_child(const XmlElement& el) {
  if (el.namespace_uri != kXsdNamespace) unsupported("foreign element <" + el.name + ">", el);
}

ElementRef parse_particle(const XmlElement& el) {
  check_schema_child(el);
  if (!is_xsd(el, "element")) unsupported("xs:" + el.name + " in xs:sequence", el);
  if (el.attribute("name") != nullptr) unsupported("local element declaration", el);
  const XmlAttribute* ref = el.attribute("ref");
  if (ref == nullptr) throw SchemaError("xs:element in xs:sequence needs a ref attribute (line " +
                                        std::to_string(el.line) + ")");
  allow_attributes(el, {"ref", "minOccurs", "maxOccurs"});
  for (const XmlElement& c : el.children) {
    if (!is_xsd(c, "annotation")) unsupported("xs:" + c.name + " in element reference", c);
  }
  return ElementRef{std::string(local_part(ref->value)), occurs(el, "minOccurs", 1), occurs(el, "maxOccurs", 1)};
}

AttrDecl parse_attribute(const XmlElement& el) {
  allow_attributes(el, {"name", "type", "use"});
  const XmlAttribute* name = el.attribute("name");
  if (name == nullptr) {
    if (el.attribute("ref") != nullptr) unsupported("attribute reference", el);
    throw SchemaError("xs:attribute without a name (line " + std::to_string(el.line) + ")");
  }
  const XmlAttribute* type = el.attribute("type");
  if (type == nullptr) unsupported("attribute without a built-in type", el);
  for (const XmlElement& c : el.children) {
    if (!is_xsd(c, "annotation")) unsupported("xs:" + c.name + " in xs:attribute", c);
  }
  AttrDecl decl{name->value, type_attribute(el, *type), false};
  if (const XmlAttribute* use = el.attribute("use")) {
    if (use->value == "required") {
      decl.required = true;
    } else if (use->value != "optional") {
      unsupported("use=\"" + use->value + "\"", el);
    }
  }
  return decl;
}

ComplexContent parse_complex_type(const XmlElement& el) {
  allow_attributes(el, {});
  ComplexContent content;
  bool seen_sequence = false;
  for (const XmlElement& c : el.children) {
    check_schema_child(c);
    if (is_xsd(c, "annotation")) continue;
    if (is_xsd(c, "sequence")) {
      if (seen_sequence || !content.attributes.empty()) unsupported("xs:sequence placement", c);
      seen_sequence = true;
      allow_attributes(c, {});
      for (const XmlElement& p : c.children) {
        if (is_xsd(p, "annotation")) continue;
        content.children.push_back(parse_particle(p));
      }
    } else if (is_xsd(c, "attribute")) {
      content.attributes.push_back(parse_attribute(c));
    } else {
      unsupported("xs:" + c.name, c);
    }
  }
  return content;
}

ElementDecl parse_element(const XmlElement& el) {
  allow_attributes(el, {"name", "type"});
  const XmlAttribute* name = el.attribute("name");
  if (name == nullptr) {
    throw SchemaError("global xs:element without a name (line " + std::to_string(el.line) + ")");
  }
  ElementDecl decl{name->value, SimpleType::kString};
  const XmlAttribute* type = el.attribute("type");
  const XmlElement* complex = nullptr;
  for (const XmlElement& c : el.children) {
    check_schema_child(c);
    if (is_xsd(c, "annotation")) continue;
    if (is_xsd(c, "complexType") && complex == nullptr && type == nullptr) {
      complex = &c;
    } else {
      unsupported("xs:" + c.name + " in xs:element", c);
    }
  }
  if (complex != nullptr) {
    decl.content = parse_complex_type(*complex);
  } else if (type != nullptr) {
    decl.content = type_attribute(el, *type);
  } else {
    unsupported("element '" + decl.name + "' without a type", el);
  }
  return decl;
}

}  // namespace

std::string_view type_name(SimpleType t) {
  switch (t) {
    case SimpleType::kString: return "string";
    case SimpleType::kInteger: return "integer";
    case SimpleType::kDecimal: return "decimal";
    case SimpleType::kBoolean: return "boolean";
    case SimpleType::kDate: return "date";
  }
  return "string";
}

std::string_view datatype_iri(SimpleType t) {
  switch (t) {
    case SimpleType::kString: return vocab::kXsdString;
    case SimpleType::kInteger: return vocab::kXsdInteger;
    case SimpleType::kDecimal: return vocab::kXsdDecimal;
    case SimpleType::kBoolean: return vocab::kXsdBoolean;
    case SimpleType::kDate: return vocab::kXsdDate;
  }
  return vocab::kXsdString;
}

std::optional<SimpleType> simple_type_from_name(std::string_view name) {
  if (name == "string") return SimpleType::kString;
  if (name == "integer") return SimpleType::kInteger;
  if (name == "decimal") return SimpleType::kDecimal;
  if (name == "boolean") return SimpleType::kBoolean;
  if (name == "date") return SimpleType::kDate;
  return std::nullopt;
}

std::string lexical_form(SimpleType t, std::string_view value) {
  return std::string(t == SimpleType::kString ? value : trim(value));
}

bool is_valid_lexical(SimpleType t, std::string_view value) {
  std::string_view v = t == SimpleType::kString ? value : trim(value);
  switch (t) {
    case SimpleType::kString:
      return true;
    case SimpleType::kInteger:
      if (!v.empty() && (v.front() == '+' || v.front() == '-')) v.remove_prefix(1);
      return all_digits(v);
    case SimpleType::kDecimal: {
      if (!v.empty() && (v.front() == '+' || v.front() == '-')) v.remove_prefix(1);
      std::size_t dot = v.find('.');
      if (dot == std::string_view::npos) return all_digits(v);
      std::string_view whole = v.substr(0, dot), frac = v.substr(dot + 1);
      if (whole.empty() && frac.empty()) return false;
      return (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac));
    }
    case SimpleType::kBoolean:
      return v == "true" || v == "false" || v == "1" || v == "0";
    case SimpleType::kDate:
      return valid_date(v);
  }
  return false;
}

const ElementDecl* XmlSchemaModel::find(std::string_view name) const {
  for (const ElementDecl& e : elements) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void XmlSchemaModel::validate() const {
  std::set<std::string> names;
  for (const ElementDecl& e : elements) {
    if (!names.insert(e.name).second) throw SchemaError("duplicate element declaration: " + e.name);
  }
  std::vector<std::string> unresolved;
  for (const ElementDecl& e : elements) {
    if (!e.is_complex()) continue;
    for (const ElementRef& r : e.complex().children) {
      if (names.count(r.name) == 0) unresolved.push_back(r.name);
      if (r.min > r.max) {
        throw SchemaError("minOccurs > maxOccurs for reference to '" + r.name + "' in '" + e.name + "'");
      }
    }
  }
  if (!unresolved.empty()) {
    std::string list;
    for (const std::string& n : unresolved) list += (list.empty() ? "" : ", ") + n;
    throw SchemaError("unresolved element reference: " + list);
  }
}

XmlSchemaModel parse_schema(std::string_view text) {
  XmlDocument doc = parse_document(text);
  const XmlElement& root = doc.root;
  if (!is_xsd(root, "schema")) throw SchemaError("root element is not xs:schema");
  allow_attributes(root, {"targetNamespace", "elementFormDefault", "attributeFormDefault", "version"});

  XmlSchemaModel model;
  if (const XmlAttribute* tns = root.attribute("targetNamespace")) model.target_namespace = tns->value;
  for (const XmlElement& c : root.children) {
    check_schema_child(c);
    if (is_xsd(c, "annotation")) continue;
    if (!is_xsd(c, "element")) unsupported("xs:" + c.name, c);
    model.elements.push_back(parse_element(c));
  }
  model.validate();
  return model;
}

}  // namespace semlift::lift
