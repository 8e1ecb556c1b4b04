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

#include "semlift/rdf/graph.hpp"

#include <algorithm>

namespace semlift::rdf {

bool Graph::insert(const Triple& t) {
  if (!triples_.insert(t).second) return false;
  by_subject_[t.subject()].insert(t);
  by_predicate_[t.predicate()].insert(t);
  by_object_[t.object()].insert(t);
  return true;
}

std::size_t Graph::merge(const Graph& other) {
  std::size_t added = 0;
  for (const Triple& t : other) added += insert(t) ? 1 : 0;
  for (const auto& [prefix, ns] : other.prefixes_) prefixes_.emplace(prefix, ns);
  return added;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  // Scan the smallest candidate set among the bound positions.
  const std::set<Triple>* candidates = &triples_;
  static const std::set<Triple> kEmpty;
  auto narrow = [&](const Index& index, const std::optional<Term>& key) {
    if (!key) return;
    auto it = index.find(*key);
    const std::set<Triple>* found = it == index.end() ? &kEmpty : &it->second;
    if (found->size() < candidates->size()) candidates = found;
  };
  narrow(by_subject_, s);
  narrow(by_predicate_, p);
  narrow(by_object_, o);

  std::vector<Triple> out;
  for (const Triple& t : *candidates) {
    if (s && t.subject() != *s) continue;
    if (p && t.predicate() != *p) continue;
    if (o && t.object() != *o) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (const Triple& t : match(s, p, std::nullopt)) out.push_back(t.object());
  return out;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (const Triple& t : match(std::nullopt, p, o)) out.push_back(t.subject());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Term> Graph::all_subjects() const {
  std::vector<Term> out;
  out.reserve(by_subject_.size());
  for (const auto& entry : by_subject_) out.push_back(entry.first);
  return out;
}

bool Graph::mentions(const Term& t) const {
  return by_subject_.count(t) != 0 || by_predicate_.count(t) != 0 || by_object_.count(t) != 0;
}

bool Graph::indexes_consistent() const {
  auto check = [this](const Index& index, auto position) {
    std::size_t total = 0;
    for (const auto& [key, set] : index) {
      if (set.empty()) return false;
      for (const Triple& t : set) {
        if (position(t) != key || triples_.count(t) == 0) return false;
      }
      total += set.size();
    }
    return total == triples_.size();
  };
  return check(by_subject_, [](const Triple& t) -> const Term& { return t.subject(); }) &&
         check(by_predicate_, [](const Triple& t) -> const Term& { return t.predicate(); }) &&
         check(by_object_, [](const Triple& t) -> const Term& { return t.object(); });
}

}  // namespace semlift::rdf
