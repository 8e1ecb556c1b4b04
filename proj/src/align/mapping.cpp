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

#include "semlift/align/mapping.hpp"

#include <charconv>
#include <cmath>

#include "semlift/rdf/vocab.hpp"

namespace semlift::align {
namespace {

constexpr MappingKind kKinds[] = {MappingKind::kEquivalentClass, MappingKind::kSubClassOf,
                                  MappingKind::kEquivalentProperty, MappingKind::kSameIndividual};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

std::string_view kind_name(MappingKind k) {
  switch (k) {
    case MappingKind::kEquivalentClass: return "EquivalentClass";
    case MappingKind::kSubClassOf: return "SubClassOf";
    case MappingKind::kEquivalentProperty: return "EquivalentProperty";
    case MappingKind::kSameIndividual: return "SameIndividual";
  }
  return "";
}

std::string_view kind_predicate(MappingKind k) {
  switch (k) {
    case MappingKind::kEquivalentClass: return vocab::kOwlEquivalentClass;
    case MappingKind::kSubClassOf: return vocab::kRdfsSubClassOf;
    case MappingKind::kEquivalentProperty: return vocab::kOwlEquivalentProperty;
    case MappingKind::kSameIndividual: return vocab::kOwlSameAs;
  }
  return "";
}

void MappingRule::validate() const {
  if (!rdf::Iri::is_valid(source)) throw ValidationError("mapping source is not a valid IRI: '" + source + "'");
  if (!rdf::Iri::is_valid(target)) throw ValidationError("mapping target is not a valid IRI: '" + target + "'");
  if (source == target) throw ValidationError("mapping source and target are identical: " + source);
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw ValidationError("mapping confidence outside [0, 1]: " + format_confidence(confidence));
  }
  if (provenance.empty() || provenance.find_first_of("\t\n\r") != std::string::npos) {
    throw ValidationError("mapping provenance must be a nonempty single-line string");
  }
}

std::string format_confidence(double c) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, c);
  std::string s(buf, end);
  if (std::isfinite(c) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string write_rules(const std::vector<MappingRule>& rules) {
  std::string out;
  for (const MappingRule& r : rules) {
    out += std::string(kind_name(r.kind)) + "\t" + r.source + "\t" + r.target + "\t" +
           format_confidence(r.confidence) + "\t" + r.provenance + "\n";
  }
  return out;
}

std::vector<MappingRule> parse_rules(std::string_view text) {
  std::vector<MappingRule> rules;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> f = split_tabs(line);
    if (f.size() != 5) {
      throw ParseError("expected 5 tab-separated fields, found " + std::to_string(f.size()), line_no, 1,
                       std::string(line.substr(0, 40)));
    }
    MappingRule r;
    bool known = false;
    for (MappingKind k : kKinds) {
      if (f[0] == kind_name(k)) {
        r.kind = k;
        known = true;
      }
    }
    if (!known) throw ParseError("unknown mapping kind", line_no, 1, std::string(f[0]));
    r.source = f[1];
    r.target = f[2];
    auto [ptr, ec] = std::from_chars(f[3].data(), f[3].data() + f[3].size(), r.confidence);
    if (ec != std::errc() || ptr != f[3].data() + f[3].size()) {
      throw ParseError("invalid confidence", line_no, 1, std::string(f[3]));
    }
    r.provenance = f[4];
    try {
      r.validate();
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no, 1, "");
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<MappingRule> rules_from_graph(const rdf::Graph& g) {
  std::vector<MappingRule> rules;
  const rdf::Term provenance = rdf::Term::iri(std::string(vocab::kSemliftMappingProvenance));
  for (MappingKind k : kKinds) {
    for (const rdf::Triple& t : g.match(std::nullopt, rdf::Term::iri(std::string(kind_predicate(k))), std::nullopt)) {
      if (!t.subject().is_iri() || !t.object().is_iri() || t.subject() == t.object()) continue;
      MappingRule r{k, t.subject().as_iri().str(), t.object().as_iri().str(), 1.0, "manual"};
      for (const rdf::Term& p : g.objects(t.subject(), provenance)) {
        if (p.is_literal()) r.provenance = p.as_literal().lexical();
      }
      rules.push_back(std::move(r));
    }
  }
  return rules;
}

}  // namespace semlift::align
