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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semlift::lift {

struct XmlAttribute {
  std::string name;           // local name, prefix stripped
  std::string namespace_uri;  // empty for unprefixed attributes
  std::string value;
};

// One element of a parsed document. Names carry the local part only; the
// resolved namespace URI is kept alongside so callers can reject foreign
// namespaces.
struct XmlElement {
  std::string name;
  std::string namespace_uri;
  std::vector<XmlAttribute> attributes;  // xmlns declarations excluded
  std::vector<XmlElement> children;
  // Concatenated character data directly inside this element.
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;

  const XmlAttribute* attribute(std::string_view local_name) const;
};

struct XmlDocument {
  XmlElement root;
};

// Non-validating XML reader. Handles the XML declaration, comments,
// processing instructions, CDATA, predefined and numeric character
// references and namespace declarations. Any syntax error throws ParseError
// with line and column; a DOCTYPE is rejected as unsupported.
XmlDocument parse_document(std::string_view text);

}  // namespace semlift::lift
