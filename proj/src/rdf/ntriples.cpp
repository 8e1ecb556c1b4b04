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

#include "semlift/rdf/ntriples.hpp"

#include "cursor.hpp"

namespace semlift::rdf {
namespace {

Term read_subject(detail::Cursor& in) {
  if (in.peek() == '<') return Term::iri(in.read_iriref());
  if (in.peek() == '_') return Term::blank(in.read_blank_label());
  in.fail("expected IRI or blank node as subject");
}

Term read_object(detail::Cursor& in) {
  char c = in.peek();
  if (c == '<') return Term::iri(in.read_iriref());
  if (c == '_') return Term::blank(in.read_blank_label());
  if (c != '"') in.fail("expected IRI, blank node or literal as object");
  std::string lexical = in.read_short_string();
  if (in.peek() == '@') return Term::lang_literal(std::move(lexical), in.read_langtag());
  if (in.starts_with("^^")) {
    in.advance(2);
    if (in.peek() != '<') in.fail("expected datatype IRI");
    std::string datatype = in.read_iriref();
    try {
      return Term::literal(std::move(lexical), datatype);
    } catch (const ValidationError& e) {
      in.fail(e.what(), "<" + datatype + ">");
    }
  }
  return Term::literal(std::move(lexical));
}

}  // namespace

Graph parse_ntriples(std::string_view text) {
  detail::Cursor in(text);
  Graph g;
  while (true) {
    in.skip_space(true);
    if (in.at_end()) break;
    Term s = read_subject(in);
    in.skip_space(false);
    if (in.peek() != '<') in.fail("expected IRI as predicate");
    Term p = Term::iri(in.read_iriref());
    in.skip_space(false);
    Term o = read_object(in);
    in.skip_space(false);
    in.expect('.');
    in.skip_space(false);
    if (!in.at_end() && in.peek() != '\n' && in.peek() != '\r') in.fail("expected end of line after '.'");
    g.insert(Triple(std::move(s), std::move(p), std::move(o)));
  }
  return g;
}

std::string write_ntriples(const Graph& g) {
  std::string out;
  for (const Triple& t : g) {
    out += t.ntriples();
    out += '\n';
  }
  return out;
}

}  // namespace semlift::rdf
