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

#include "semlift/enrich/enrich.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semlift/rdf/turtle.hpp"
#include "semlift/text/percent.hpp"

namespace semlift::enrich {
namespace {

namespace fs = std::filesystem;
using rdf::Term;
using rdf::Triple;

class FixtureFetcher : public DocumentFetcher {
 public:
  explicit FixtureFetcher(fs::path dir) : dir_(std::move(dir)) {}

  std::optional<std::string> fetch(const std::string& iri) override {
    fs::path p = dir_ / fixture_filename(iri);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  fs::path dir_;
};

std::vector<std::string> aliases(const rdf::Graph& g, const Term& target) {
  const Term same = Term::iri(std::string(vocab::kOwlSameAs));
  std::set<std::string> out;
  for (const Term& o : g.objects(target, same)) {
    if (o.is_iri()) out.insert(o.as_iri().str());
  }
  for (const Term& s : g.subjects(same, target)) {
    if (s.is_iri()) out.insert(s.as_iri().str());
  }
  out.erase(target.as_iri().str());
  return {out.begin(), out.end()};
}

}  // namespace

std::unique_ptr<DocumentFetcher> make_http_fetcher(const std::string& prefix);

void EnrichmentSource::validate() const {
  if (id.empty()) throw EnrichmentError("enrichment source without an id");
  if (predicates.empty()) throw EnrichmentError("enrichment source '" + id + "' enables no predicates");
  for (const std::string& p : predicates) {
    if (!rdf::Iri::is_valid(p)) throw EnrichmentError("enrichment source '" + id + "': invalid predicate " + p);
  }
  if (kind == SourceKind::kFixtureDirectory) {
    std::error_code ec;
    if (!fs::is_directory(location, ec)) {
      throw EnrichmentError("enrichment source '" + id + "': fixture directory not readable: " + location);
    }
  }
}

std::size_t EnrichmentReport::total_added() const {
  std::size_t n = 0;
  for (const EntityReport& e : entities) n += e.added;
  return n;
}

std::string EnrichmentReport::to_tsv() const {
  std::string out;
  for (const EntityReport& e : entities) {
    std::string langs, resolved;
    for (const std::string& l : e.languages) langs += (langs.empty() ? "" : ",") + l;
    for (const std::string& r : e.resolved) resolved += (resolved.empty() ? "" : " ") + r;
    out += "enriched\t" + e.source + "\t" + e.entity + "\t" + std::to_string(e.added) + "\t" +
           (langs.empty() ? "-" : langs) + "\t" + resolved + "\n";
  }
  for (const SkippedEntity& s : skipped) out += "skipped\t" + s.source + "\t" + s.entity + "\t" + s.reason + "\n";
  return out;
}

std::string fixture_filename(const std::string& iri) { return text::percent_encode(iri) + ".ttl"; }

std::unique_ptr<DocumentFetcher> make_fetcher(const EnrichmentSource& source) {
  if (source.kind == SourceKind::kFixtureDirectory) return std::make_unique<FixtureFetcher>(source.location);
  return make_http_fetcher(source.location);
}

EnrichmentResult enrich(const rdf::Graph& g, const std::set<std::string>& targets,
                        const std::vector<EnrichmentSource>& sources, const EnrichOptions& options) {
  std::vector<std::unique_ptr<DocumentFetcher>> owned;
  std::vector<DocumentFetcher*> fetchers;
  for (const EnrichmentSource& s : sources) {
    s.validate();
    if (s.kind == SourceKind::kEndpoint && !options.allow_live) {
      throw EnrichmentError("enrichment source '" + s.id + "' is a live endpoint; live mode is disabled");
    }
    owned.push_back(make_fetcher(s));
    fetchers.push_back(owned.back().get());
  }
  return enrich_with(g, targets, sources, fetchers);
}

EnrichmentResult enrich_with(const rdf::Graph& g, const std::set<std::string>& targets,
                             const std::vector<EnrichmentSource>& sources,
                             const std::vector<DocumentFetcher*>& fetchers) {
  if (fetchers.size() != sources.size()) throw EnrichmentError("one fetcher per source required");
  EnrichmentResult result{g, {}};
  for (std::size_t si = 0; si < sources.size(); ++si) {
    const EnrichmentSource& source = sources[si];
    std::set<std::string> enabled(source.predicates.begin(), source.predicates.end());
    for (const std::string& target : targets) {
      const Term local = Term::iri(target);
      if (!g.mentions(local)) {
        result.report.skipped.push_back({target, source.id, "not in graph"});
        continue;
      }
      std::vector<std::string> candidates{target};
      for (std::string& a : aliases(g, local)) candidates.push_back(std::move(a));

      std::vector<Triple> kept;
      std::vector<std::string> resolved;
      std::string failure;
      for (const std::string& candidate : candidates) {
        std::optional<std::string> doc;
        try {
          doc = fetchers[si]->fetch(candidate);
        } catch (const EnrichmentError& e) {
          failure = e.what();
          break;
        }
        if (!doc) continue;
        rdf::Graph remote;
        try {
          remote = rdf::parse_turtle(*doc);
        } catch (const ParseError& e) {
          failure = "malformed document for " + candidate + ": " + e.what();
          break;
        }
        resolved.push_back(candidate);
        const Term described = Term::iri(candidate);
        for (const Triple& t : remote) {
          if (!enabled.count(t.predicate().as_iri().str())) continue;
          if (t.subject().is_blank() || t.object().is_blank()) continue;
          kept.push_back(t.subject() == described ? Triple(local, t.predicate(), t.object()) : t);
        }
      }
      if (!failure.empty()) {
        result.report.skipped.push_back({target, source.id, failure});
        continue;
      }
      if (resolved.empty()) {
        result.report.skipped.push_back({target, source.id, "not found"});
        continue;
      }
      EntityReport entry{target, source.id, resolved, 0, {}};
      for (const Triple& t : kept) {
        if (result.graph.insert(t)) ++entry.added;
        if (t.object().is_literal() && t.object().as_literal().language()) {
          entry.languages.insert(*t.object().as_literal().language());
        }
      }
      result.report.entities.push_back(std::move(entry));
    }
  }
  return result;
}

std::set<std::string> categories_of(const rdf::Graph& g, const std::string& entity,
                                    const CategoryPredicates& predicates) {
  const Term subject = Term::iri(predicates.subject);
  const Term broader = Term::iri(predicates.broader);
  std::set<std::string> seen;
  std::vector<Term> todo;
  for (const Term& c : g.objects(Term::iri(entity), subject)) {
    if (c.is_iri() && seen.insert(c.as_iri().str()).second) todo.push_back(c);
  }
  while (!todo.empty()) {
    Term c = std::move(todo.back());
    todo.pop_back();
    for (const Term& b : g.objects(c, broader)) {
      if (b.is_iri() && seen.insert(b.as_iri().str()).second) todo.push_back(b);
    }
  }
  return seen;
}

Categories categorize(const rdf::Graph& g, const CategoryPredicates& predicates) {
  Categories out;
  for (const Triple& t : g.match(std::nullopt, Term::iri(predicates.subject), std::nullopt)) {
    if (!t.subject().is_iri()) continue;
    const std::string& e = t.subject().as_iri().str();
    if (!out.count(e)) out[e] = categories_of(g, e, predicates);
  }
  return out;
}

}  // namespace semlift::enrich
