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

#include <httplib.h>

#include "semlift/enrich/enrich.hpp"
#include "semlift/text/percent.hpp"

namespace semlift::enrich {
namespace {

// Live dereferencing over plain HTTP with Turtle content negotiation.
class HttpFetcher : public DocumentFetcher {
 public:
  explicit HttpFetcher(std::string prefix) : prefix_(std::move(prefix)) {}

  std::optional<std::string> fetch(const std::string& iri) override {
    std::string url = prefix_.empty() ? iri : prefix_ + text::percent_encode(iri);
    if (url.rfind("http://", 0) != 0) throw EnrichmentError("live mode supports http:// URLs only: " + url);
    std::size_t path_start = url.find('/', 7);
    std::string origin = url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path, {{"Accept", "text/turtle"}});
    if (!res) throw EnrichmentError("HTTP request failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status == 404 || res->status == 410) return std::nullopt;
    if (res->status != 200) {
      throw EnrichmentError("HTTP status " + std::to_string(res->status) + " for " + url);
    }
    return res->body;
  }

 private:
  std::string prefix_;
};

}  // namespace

std::unique_ptr<DocumentFetcher> make_http_fetcher(const std::string& prefix) {
  return std::make_unique<HttpFetcher>(prefix);
}

}  // namespace semlift::enrich
