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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semlift/error.hpp"
#include "semlift/rdf/graph.hpp"

namespace semlift::search {

class QueryError : public Error {
 public:
  using Error::Error;
};

struct LexicalEntry {
  std::string surface;
  std::string normalized;
  std::string language;   // empty when untagged
  std::string concept_iri;    // subject IRI
  std::string predicate;  // label or synonym predicate it came from
};

struct Completion {
  std::string surface;
  std::string language;
  std::string concept_iri;
  double score = 0;  // query length / form length in code points; 0 for concept synonyms
};

// Prefix tree over normalized label and synonym strings.
class AutocompleteIndex {
 public:
  // One entry per (IRI subject, listed predicate, literal object) triple.
  static AutocompleteIndex build(const rdf::Graph& g, const std::vector<std::string>& label_predicates);

  std::size_t size() const { return entries_.size(); }
  const std::vector<LexicalEntry>& entries() const { return entries_; }

  // Entries whose normalized form starts with the normalized query, ranked by
  // shorter form, then surface, then concept IRI, with (surface, concept_iri)
  // duplicates removed. An empty normalized query yields nothing. Throws
  // QueryError when limit is 0.
  std::vector<Completion> complete(std::string_view query, std::size_t limit) const;

 private:
  struct Node {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted by byte
    std::vector<std::uint32_t> entries;                             // forms ending here
  };

  std::uint32_t child(std::uint32_t node, unsigned char byte) const;
  void insert(std::uint32_t entry);

  std::vector<LexicalEntry> entries_;
  std::vector<std::size_t> lengths_;  // code points of each normalized form
  std::map<std::string, std::vector<std::uint32_t>> by_concept_;
  std::vector<Node> nodes_{Node{}};
};

}  // namespace semlift::search
