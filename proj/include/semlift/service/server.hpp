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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "semlift/service/api.hpp"

namespace httplib {
class Server;
}

namespace semlift::service {

// cpp-httplib binding for Api. Files under ui_dir are served at /ui/.
class HttpServer {
 public:
  HttpServer(const Api& api, std::optional<std::filesystem::path> ui_dir = std::nullopt);
  ~HttpServer();

  // Binds and returns the bound port (port 0 picks a free one). Throws
  // semlift::Error when binding fails.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();
  bool running() const;

 private:
  const Api& api_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace semlift::service
