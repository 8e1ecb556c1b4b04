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

// Parses an N-Triples document. Fail-fast: the first syntax error throws
// ParseError (with line, column and offending token) and no graph is
// returned.
Graph parse_ntriples(std::string_view text);

// One triple per line, each terminated by " .\n", in sorted order.
std::string write_ntriples(const Graph& g);

}  // namespace semlift::rdf
