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

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "semlift/service/snapshot.hpp"

namespace semlift::service {

struct Request {
  std::string method;
  std::string path;  // raw, still percent-encoded
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lower-case names
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Endpoint handlers: pure functions of the snapshot and the request. JSON
// bodies have sorted keys so equal inputs give byte-identical output.
Response handle_autocomplete(const Snapshot& s, const Request& r);
Response handle_facets(const Snapshot& s);
Response handle_search(const Snapshot& s, const Request& r);
Response handle_entity(const Snapshot& s, const std::string& encoded_iri, const Request& r);
Response handle_health(const Snapshot& s);

// Routes requests to the handlers above over the store's current snapshot.
// POST /admin/reload is served only when a reloader is given.
class Api {
 public:
  using Reloader = std::function<std::shared_ptr<const Snapshot>()>;

  explicit Api(SnapshotStore& store, Reloader reloader = {}) : store_(store), reloader_(std::move(reloader)) {}
  Response handle(const Request& r) const;

 private:
  SnapshotStore& store_;
  Reloader reloader_;
};

}  // namespace semlift::service
