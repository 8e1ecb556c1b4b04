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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semlift/rdf/term.hpp"

namespace semlift::rdf {

using PrefixMap = std::map<std::string, std::string>;

// In-memory triple set with subject, predicate and object indexes.
//
// The triple set is ordered by the canonical N-Triples rendering of
// (subject, predicate, object), so iteration and every match() result come
// out in the same order `write_ntriples` uses. A Graph is single-writer;
// a const Graph may be read from any number of threads.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  // Returns true when the triple was not present before.
  bool insert(const Triple& t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }

  // Inserts every triple of `other`; returns how many were new. Prefixes of
  // `other` are added when not already bound.
  std::size_t merge(const Graph& other);

  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  const std::set<Triple>& triples() const { return triples_; }

  // Triples matching every bound position. Unbound positions are wildcards.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  // Objects of (s, p, *), in term order.
  std::vector<Term> objects(const Term& s, const Term& p) const;
  // Subjects of (*, p, o), in term order.
  std::vector<Term> subjects(const Term& p, const Term& o) const;
  // Distinct subjects in term order.
  std::vector<Term> all_subjects() const;

  bool has_subject(const Term& s) const { return by_subject_.count(s) != 0; }
  // True when the term occurs anywhere in the graph.
  bool mentions(const Term& t) const;

  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  // Index self-check: every triple is reachable through each index and the
  // indexes hold nothing else. Used by tests.
  bool indexes_consistent() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  using Index = std::map<Term, std::set<Triple>>;

  std::set<Triple> triples_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
  PrefixMap prefixes_;
};

}  // namespace semlift::rdf
