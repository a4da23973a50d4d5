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

#include "avatar_game/api/http_server.h"

#include <httplib.h>

namespace avatar_game::api {

struct HttpServer::Impl {
  httplib::Server server;
};

namespace {

void dispatch(GameService& service, const std::string& method,
              const httplib::Request& req, httplib::Response& res) {
  ApiRequest request;
  request.method = method;
  request.path = req.path;
  for (const auto& [name, value] : req.params) request.query.emplace(name, value);
  for (const auto& [name, value] : req.headers) request.headers.emplace(name, value);
  request.body = req.body;
  const ApiResponse response = service.handle(request);
  res.status = response.status;
  res.set_content(response.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>()) {
  impl_->server.Get(".*", [&service](const httplib::Request& req, httplib::Response& res) {
    dispatch(service, "GET", req, res);
  });
  impl_->server.Post(".*", [&service](const httplib::Request& req, httplib::Response& res) {
    dispatch(service, "POST", req, res);
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
  } else {
    port_ = impl_->server.bind_to_port(host, port) ? port : -1;
  }
  return port_;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::start() {
  thread_ = std::thread([this] { run(); });
  impl_->server.wait_until_ready();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace avatar_game::api
