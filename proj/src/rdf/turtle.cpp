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

#include "semlift/rdf/turtle.hpp"

#include <optional>

#include "cursor.hpp"
#include "semlift/rdf/vocab.hpp"

namespace semlift::rdf {
namespace {

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         (static_cast<unsigned char>(c) & 0x80) != 0;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-';
}

bool is_delimiter(char c) {
  return c == '\0' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.' || c == ';' ||
         c == ',' || c == '#' || c == '<' || c == '"' || c == '\'';
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : in_(text) {}

  Graph parse() {
    while (true) {
      in_.skip_space(true);
      if (in_.at_end()) break;
      statement();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void unsupported(const std::string& feature) {
    in_.fail("unsupported Turtle feature: " + feature);
  }

  bool keyword_ahead(std::string_view word, bool case_insensitive) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = in_.peek(i);
      if (case_insensitive && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      if (c != word[i]) return false;
    }
    char next = in_.peek(word.size());
    return next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == '<' || next == '\0';
  }

  void statement() {
    if (in_.starts_with("@prefix")) {
      in_.advance(7);
      prefix_directive();
      in_.skip_space(true);
      in_.expect('.');
      return;
    }
    if (keyword_ahead("PREFIX", true)) {
      in_.advance(6);
      prefix_directive();
      return;
    }
    if (in_.starts_with("@base") || keyword_ahead("BASE", true)) unsupported("base IRI");
    if (keyword_ahead("GRAPH", true) || in_.peek() == '{') unsupported("named graph");

    Term subject = read_subject();
    predicate_object_list(subject);
    in_.skip_space(true);
    in_.expect('.');
  }

  void prefix_directive() {
    in_.skip_space(true);
    std::string name;
    while (!in_.at_end() && in_.peek() != ':') {
      char c = in_.peek();
      if (!is_name_char(c) && c != '.') in_.fail("invalid prefix name");
      name += in_.get();
    }
    if (!name.empty() && (name.back() == '.' || !is_name_start(name.front()) || name.front() == '_')) {
      in_.fail("invalid prefix name", name + ":");
    }
    in_.expect(':');
    in_.skip_space(true);
    if (in_.peek() != '<') in_.fail("expected namespace IRI");
    std::string ns = in_.read_iriref();
    graph_.prefixes()[name] = ns;
  }

  void check_unsupported_term() {
    char c = in_.peek();
    if (c == '[') unsupported("blank node property list");
    if (c == '(') unsupported("collection");
    if (in_.starts_with("<<")) unsupported("quoted triple");
  }

  Term read_subject() {
    check_unsupported_term();
    char c = in_.peek();
    if (c == '<') return Term::iri(in_.read_iriref());
    if (c == '_' && in_.peek(1) == ':') return Term::blank(in_.read_blank_label());
    if (c == '"' || c == '\'' || (c >= '0' && c <= '9') || c == '+' || c == '-') {
      in_.fail("literal in subject position");
    }
    return Term::iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      in_.skip_space(true);
      Term predicate = read_verb();
      while (true) {
        in_.skip_space(true);
        Term object = read_object();
        graph_.insert(Triple(subject, predicate, std::move(object)));
        in_.skip_space(true);
        if (in_.peek() != ',') break;
        in_.get();
      }
      if (in_.peek() != ';') break;
      // Repeated ';' and a trailing ';' before '.' are allowed.
      while (in_.peek() == ';') {
        in_.get();
        in_.skip_space(true);
      }
      if (in_.peek() == '.' || in_.peek() == ']') break;
    }
  }

  Term read_verb() {
    if (in_.peek() == 'a' && is_delimiter(in_.peek(1))) {
      in_.get();
      return Term::iri(std::string(vocab::kRdfType));
    }
    check_unsupported_term();
    if (in_.peek() == '<') return Term::iri(in_.read_iriref());
    if (in_.peek() == '_' && in_.peek(1) == ':') in_.fail("blank node as predicate");
    return Term::iri(prefixed_name());
  }

  Term read_object() {
    check_unsupported_term();
    char c = in_.peek();
    if (c == '<') return Term::iri(in_.read_iriref());
    if (c == '_' && in_.peek(1) == ':') return Term::blank(in_.read_blank_label());
    if (c == '"' || c == '\'') return read_literal();
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || (c == '.' && in_.peek(1) >= '0' && in_.peek(1) <= '9')) {
      return read_number();
    }
    if (in_.starts_with("true") && is_delimiter(in_.peek(4))) {
      in_.advance(4);
      return Term::literal("true", vocab::kXsdBoolean);
    }
    if (in_.starts_with("false") && is_delimiter(in_.peek(5))) {
      in_.advance(5);
      return Term::literal("false", vocab::kXsdBoolean);
    }
    return Term::iri(prefixed_name());
  }

  Term read_literal() {
    char q = in_.peek();
    std::string lexical = (in_.peek(1) == q && in_.peek(2) == q) ? in_.read_long_string()
                                                                  : in_.read_short_string();
    if (in_.peek() == '@') return Term::lang_literal(std::move(lexical), in_.read_langtag());
    if (in_.starts_with("^^")) {
      in_.advance(2);
      std::string datatype = in_.peek() == '<' ? in_.read_iriref() : prefixed_name();
      try {
        return Term::literal(std::move(lexical), datatype);
      } catch (const ValidationError& e) {
        in_.fail(e.what(), datatype);
      }
    }
    return Term::literal(std::move(lexical));
  }

  Term read_number() {
    std::string text;
    if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
    auto digits = [&] {
      std::size_t n = 0;
      while (in_.peek() >= '0' && in_.peek() <= '9') {
        text += in_.get();
        ++n;
      }
      return n;
    };
    std::size_t int_digits = digits();
    std::string_view datatype = vocab::kXsdInteger;
    if (in_.peek() == '.' && in_.peek(1) >= '0' && in_.peek(1) <= '9') {
      text += in_.get();
      digits();
      datatype = vocab::kXsdDecimal;
    } else if (int_digits == 0) {
      in_.fail("invalid numeric literal", text);
    }
    if (in_.peek() == 'e' || in_.peek() == 'E') {
      text += in_.get();
      if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
      if (digits() == 0) in_.fail("invalid exponent in numeric literal", text);
      datatype = vocab::kXsdDouble;
    }
    return Term::literal(std::move(text), datatype);
  }

  std::string prefixed_name() {
    std::size_t line = in_.line(), column = in_.column();
    std::string prefix;
    while (!in_.at_end() && in_.peek() != ':') {
      char c = in_.peek();
      if (!is_name_char(c) && !(c == '.' && is_name_char(in_.peek(1)))) break;
      prefix += in_.get();
    }
    if (in_.peek() != ':') {
      throw ParseError("unexpected token", line, column, prefix.empty() ? in_.current_token() : prefix);
    }
    in_.get();
    std::string local;
    while (!in_.at_end()) {
      char c = in_.peek();
      if (is_name_char(c) || (c >= '0' && c <= '9') || c == ':') {
        local += in_.get();
      } else if (c == '.' && (is_name_char(in_.peek(1)) || in_.peek(1) == ':' || in_.peek(1) == '%' ||
                              in_.peek(1) == '\\')) {
        local += in_.get();
      } else if (c == '%') {
        local += in_.get();
        for (int i = 0; i < 2; ++i) {
          char h = in_.peek();
          bool hex = (h >= '0' && h <= '9') || (h >= 'a' && h <= 'f') || (h >= 'A' && h <= 'F');
          if (!hex) in_.fail("invalid percent escape in prefixed name");
          local += in_.get();
        }
      } else if (c == '\\') {
        in_.get();
        char e = in_.at_end() ? '\0' : in_.peek();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos || e == '\0') {
          in_.fail("invalid escape in prefixed name");
        }
        local += in_.get();
      } else {
        break;
      }
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) {
      throw ParseError("undefined prefix", line, column, prefix + ":");
    }
    std::string iri = it->second + local;
    if (!Iri::is_valid(iri)) throw ParseError("invalid IRI", line, column, prefix + ":" + local);
    return iri;
  }

  detail::Cursor in_;
  Graph graph_;
};

bool is_simple_local(std::string_view local) {
  if (local.empty()) return true;
  char first = local.front();
  if (!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z') ||
        (first >= '0' && first <= '9') || first == '_')) {
    return false;
  }
  for (char c : local) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

bool is_simple_prefix(std::string_view name) {
  if (name.empty()) return true;
  if (!((name[0] >= 'a' && name[0] <= 'z') || (name[0] >= 'A' && name[0] <= 'Z'))) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const PrefixMap& prefixes) {
    for (const auto& [name, ns] : prefixes) {
      if (is_simple_prefix(name) && Iri::is_valid(ns)) prefixes_.emplace(name, ns);
    }
  }

  std::string write(const Graph& g) {
    std::string out;
    for (const auto& [name, ns] : prefixes_) out += "@prefix " + name + ": <" + ns + "> .\n";
    if (!prefixes_.empty() && !g.empty()) out += '\n';

    const Term rdf_type = Term::iri(std::string(vocab::kRdfType));
    auto it = g.begin();
    bool first_block = true;
    while (it != g.end()) {
      const Term subject = it->subject();
      auto block_end = it;
      while (block_end != g.end() && block_end->subject() == subject) ++block_end;

      if (!first_block) out += '\n';
      first_block = false;
      out += render(subject);

      // rdf:type first, then the rest in order.
      std::vector<std::pair<const Term*, std::vector<const Term*>>> groups;
      for (auto t = it; t != block_end; ++t) {
        if (groups.empty() || *groups.back().first != t->predicate()) {
          groups.emplace_back(&t->predicate(), std::vector<const Term*>{});
        }
        groups.back().second.push_back(&t->object());
      }
      std::stable_partition(groups.begin(), groups.end(),
                            [&](const auto& grp) { return *grp.first == rdf_type; });

      for (std::size_t i = 0; i < groups.size(); ++i) {
        out += i == 0 ? " " : " ;\n    ";
        out += *groups[i].first == rdf_type ? std::string("a") : render(*groups[i].first);
        for (std::size_t k = 0; k < groups[i].second.size(); ++k) {
          out += k == 0 ? " " : " , ";
          out += render(*groups[i].second[k]);
        }
      }
      out += " .\n";
      it = block_end;
    }
    return out;
  }

 private:
  std::string render_iri(const std::string& iri) const {
    const std::pair<const std::string, std::string>* best = nullptr;
    for (const auto& entry : prefixes_) {
      const std::string& ns = entry.second;
      if (iri.size() < ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
      if (!is_simple_local(std::string_view(iri).substr(ns.size()))) continue;
      if (best == nullptr || ns.size() > best->second.size()) best = &entry;
    }
    if (best == nullptr) return "<" + iri + ">";
    return best->first + ":" + iri.substr(best->second.size());
  }

  std::string render(const Term& t) const {
    if (t.is_iri()) return render_iri(t.as_iri().str());
    if (t.is_blank()) return t.ntriples();
    const Literal& lit = t.as_literal();
    std::string out = "\"" + escape_string(lit.lexical()) + "\"";
    if (lit.language()) return out + "@" + *lit.language();
    if (lit.datatype().str() == vocab::kXsdString) return out;
    return out + "^^" + render_iri(lit.datatype().str());
  }

  PrefixMap prefixes_;
};

}  // namespace

Graph parse_turtle(std::string_view text) { return TurtleParser(text).parse(); }

std::string write_turtle(const Graph& g, const PrefixMap& prefixes) {
  return TurtleWriter(prefixes).write(g);
}

}  // namespace semlift::rdf
