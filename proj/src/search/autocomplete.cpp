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

#include "semlift/search/autocomplete.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "semlift/text/normalize.hpp"

namespace semlift::search {

namespace {
constexpr std::uint32_t kNone = 0xFFFFFFFF;
}

AutocompleteIndex AutocompleteIndex::build(const rdf::Graph& g, const std::vector<std::string>& label_predicates) {
  AutocompleteIndex idx;
  for (const std::string& p : std::set<std::string>(label_predicates.begin(), label_predicates.end())) {
    for (const rdf::Triple& t : g.match(std::nullopt, rdf::Term::iri(p), std::nullopt)) {
      if (!t.subject().is_iri() || !t.object().is_literal()) continue;
      const rdf::Literal& lit = t.object().as_literal();
      idx.entries_.push_back({lit.lexical(), text::normalize(lit.lexical()), lit.language().value_or(""),
                              t.subject().as_iri().str(), p});
      idx.lengths_.push_back(text::codepoint_length(idx.entries_.back().normalized));
      const auto id = static_cast<std::uint32_t>(idx.entries_.size() - 1);
      idx.insert(id);
      idx.by_concept_[idx.entries_.back().concept_iri].push_back(id);
    }
  }
  return idx;
}

std::uint32_t AutocompleteIndex::child(std::uint32_t node, unsigned char byte) const {
  const auto& kids = nodes_[node].children;
  auto it = std::lower_bound(kids.begin(), kids.end(), std::make_pair(byte, std::uint32_t{0}));
  return it != kids.end() && it->first == byte ? it->second : kNone;
}

void AutocompleteIndex::insert(std::uint32_t entry) {
  std::uint32_t node = 0;
  for (char c : entries_[entry].normalized) {
    auto byte = static_cast<unsigned char>(c);
    std::uint32_t next = child(node, byte);
    if (next == kNone) {
      next = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
      auto& kids = nodes_[node].children;
      kids.insert(std::lower_bound(kids.begin(), kids.end(), std::make_pair(byte, std::uint32_t{0})),
                  {byte, next});
    }
    node = next;
  }
  nodes_[node].entries.push_back(entry);
}

std::vector<Completion> AutocompleteIndex::complete(std::string_view query, std::size_t limit) const {
  if (limit == 0) throw QueryError("limit must be at least 1");
  std::string q = text::normalize(query);
  if (q.empty()) return {};
  std::uint32_t node = 0;
  for (char c : q) {
    node = child(node, static_cast<unsigned char>(c));
    if (node == kNone) return {};
  }

  std::vector<std::uint32_t> hits;
  std::vector<std::uint32_t> stack{node};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    hits.insert(hits.end(), n.entries.begin(), n.entries.end());
    for (const auto& [byte, next] : n.children) stack.push_back(next);
  }
  auto key = [this](std::uint32_t i) {
    const LexicalEntry& e = entries_[i];
    return std::tie(lengths_[i], e.surface, e.concept_iri, e.language, e.predicate);
  };
  auto by_key = [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); };
  std::sort(hits.begin(), hits.end(), by_key);

  std::set<std::uint32_t> direct(hits.begin(), hits.end());
  std::set<std::string_view> concepts;
  for (std::uint32_t i : hits) concepts.insert(entries_[i].concept_iri);
  std::vector<std::uint32_t> synonyms;
  for (std::string_view c : concepts) {
    for (std::uint32_t i : by_concept_.at(std::string(c))) {
      if (!direct.count(i)) synonyms.push_back(i);
    }
  }
  std::sort(synonyms.begin(), synonyms.end(), by_key);

  const double query_length = static_cast<double>(text::codepoint_length(q));
  std::vector<Completion> out;
  std::set<std::pair<std::string_view, std::string_view>> seen;
  auto emit = [&](std::uint32_t i, bool prefix) {
    const LexicalEntry& e = entries_[i];
    if (!seen.emplace(e.surface, e.concept_iri).second) return;
    out.push_back({e.surface, e.language, e.concept_iri, prefix ? query_length / static_cast<double>(lengths_[i]) : 0.0});
  };
  for (std::uint32_t i : hits) {
    if (out.size() == limit) return out;
    emit(i, true);
  }
  for (std::uint32_t i : synonyms) {
    if (out.size() == limit) return out;
    emit(i, false);
  }
  return out;
}

}  // namespace semlift::search
