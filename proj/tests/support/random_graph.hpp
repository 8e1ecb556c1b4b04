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

#include <random>
#include <string>
#include <vector>

#include "semlift/rdf/graph.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::testing {

// Generates graphs that stress the serializers: IRIs with and without
// abbreviable local names, blank nodes, and literals carrying quotes,
// backslashes, line breaks, control characters and non-ASCII text.
class RandomGraphGenerator {
 public:
  explicit RandomGraphGenerator(std::uint64_t seed) : rng_(seed) {}

  rdf::PrefixMap prefixes() const {
    return {{"ex", "http://example.org/"},
            {"xsd", std::string(vocab::kXsdString.substr(0, vocab::kXsdString.size() - 6))},
            {"v", "http://vocab.example/ns#"}};
  }

  rdf::Term iri() {
    static const std::vector<std::string> bases = {
        "http://example.org/", "http://vocab.example/ns#", "urn:isbn:", "http://other.example/a/b?q=",
        "http://\xE4\xBE\x8B\xE3\x81\x88.jp/\xC3\xA4"};
    static const std::vector<std::string> locals = {"a", "b", "thing", "x-1", "9z", "v.w", "", "%20q",
                                                    "caf\xC3\xA9", "a_b"};
    return rdf::Term::iri(pick(bases) + pick(locals) + std::to_string(uniform(0, 30)));
  }

  rdf::Term blank() { return rdf::Term::blank("b" + std::to_string(uniform(0, 20))); }

  rdf::Term literal() {
    std::string lexical = text();
    switch (uniform(0, 4)) {
      case 0:
        return rdf::Term::literal(lexical);
      case 1:
        return rdf::Term::lang_literal(lexical, pick(std::vector<std::string>{"en", "de", "EN-us", "zh-Hans"}));
      case 2:
        return rdf::Term::literal(std::to_string(uniform(-1000, 1000)), vocab::kXsdInteger);
      case 3:
        return rdf::Term::literal(lexical, "http://vocab.example/ns#custom");
      default:
        return rdf::Term::literal(lexical, vocab::kXsdDate);
    }
  }

  rdf::Graph graph(std::size_t max_triples) {
    rdf::Graph g;
    std::size_t n = static_cast<std::size_t>(uniform(0, static_cast<int>(max_triples)));
    for (std::size_t i = 0; i < n; ++i) {
      rdf::Term s = uniform(0, 5) == 0 ? blank() : iri();
      rdf::Term p = iri();
      int kind = uniform(0, 2);
      rdf::Term o = kind == 0 ? iri() : kind == 1 ? literal() : blank();
      g.insert(rdf::Triple(s, p, o));
    }
    return g;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::string text() {
    static const std::vector<std::string> pieces = {
        "water", " ", "\"", "\\", "\n", "\r", "\t", "'", "'''", "\"\"\"", "#", "<a>", "\x01",
        "\x7f", "W\xC3\xA4sser", "\xE6\xB0\xB4", "\xF0\x9F\x92\xA7", "@en", "^^", ".", ";", ","};
    std::string out;
    int n = uniform(0, 6);
    for (int i = 0; i < n; ++i) out += pick(pieces);
    return out;
  }

  std::mt19937_64 rng_;
};

}  // namespace semlift::testing
