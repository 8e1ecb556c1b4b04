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

namespace semlift::text {

// Matching key for labels and queries: Unicode case fold, canonical
// decomposition with nonspacing marks removed, recomposition, and runs of
// whitespace collapsed to one ASCII space with the ends trimmed.
// normalize(normalize(s)) == normalize(s).
std::string normalize(std::string_view utf8);

// Number of Unicode code points in a UTF-8 string.
std::size_t codepoint_length(std::string_view utf8);

}  // namespace semlift::text
