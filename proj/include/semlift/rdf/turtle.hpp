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

#pragma once

#include <string>
#include <string_view>

#include "semlift/rdf/graph.hpp"

namespace semlift::rdf {

// Parses the supported Turtle subset: @prefix / PREFIX, prefixed names, `a`,
// predicate lists (;), object lists (,), language tags, typed literals,
// numeric and boolean shorthands, and all four string quoting forms.
//
// Collections, blank node property lists, quoted triples, base IRIs and
// relative IRIs are rejected with "unsupported Turtle feature: <name>".
// Declared prefixes are recorded in the returned graph's prefix map.
Graph parse_turtle(std::string_view text);

// Deterministic Turtle: the given prefixes (sorted by name), then one block
// per subject in term order with rdf:type first and the remaining predicates
// in term order. IRIs are abbreviated when a prefix covers them with a
// simple local name.
std::string write_turtle(const Graph& g, const PrefixMap& prefixes);
inline std::string write_turtle(const Graph& g) { return write_turtle(g, g.prefixes()); }

}  // namespace semlift::rdf
