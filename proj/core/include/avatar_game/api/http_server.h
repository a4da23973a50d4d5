// Copyright 2026 The Avatar Game Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AVATAR_GAME_API_HTTP_SERVER_H_
#define AVATAR_GAME_API_HTTP_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "avatar_game/api/service.h"

namespace avatar_game::api {

// JSON-over-HTTP front for GameService.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds host:port (port 0 picks a free port) and returns the bound port, or
  // -1 on failure.
  int bind(const std::string& host, int port);
  // Serves until stop(). Requires a successful bind().
  void run();
  // run() on a background thread.
  void start();
  void stop();

  int port() const { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
  int port_ = -1;
};

}  // namespace avatar_game::api

#endif  // AVATAR_GAME_API_HTTP_SERVER_H_
