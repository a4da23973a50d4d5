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

#ifndef AVATAR_GAME_API_SERVICE_H_
#define AVATAR_GAME_API_SERVICE_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "avatar_game/auth.h"
#include "avatar_game/clock.h"
#include "avatar_game/content.h"
#include "avatar_game/persuasion.h"
#include "avatar_game/session.h"
#include "avatar_game/store.h"

namespace avatar_game::api {

struct ServiceConfig {
  std::filesystem::path data_dir = "avatar-game-data";
  std::shared_ptr<const ContentPack> content;
  // Test mode: ids, tokens and seeds derive from this value and the
  // X-Test-Now header may override the clock.
  std::optional<std::uint64_t> seed_override;
  std::chrono::seconds token_ttl = std::chrono::hours{24 * 30};
  std::uint32_t daily_quota = kDefaultDailyQuota;
  VerifyPolicy verify_policy;
  std::string host = "127.0.0.1";
  int port = 8080;

  // AVATAR_GAME_PORT, AVATAR_GAME_HOST, AVATAR_GAME_DATA_DIR,
  // AVATAR_GAME_CONTENT (defaults to the bundled pack), AVATAR_GAME_SEED.
  static ServiceConfig from_env();
};

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lower-case names
  std::string body;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// HTTP status for each error code.
int http_status(ErrorCode code) noexcept;

struct CreatedPlayer {
  PlayerRecord record;
  AvatarProfile profile;
  std::string token;
  Timestamp token_expires_at{};
};

// Transport-independent service. Requests for one player (and therefore for
// each of that player's sessions) run one at a time; different players
// proceed in parallel.
class GameService {
 public:
  using Clock = std::function<Timestamp()>;

  explicit GameService(ServiceConfig config, Clock clock = system_now);

  ApiResponse handle(const ApiRequest& request);

  CreatedPlayer create_player(Timestamp now);

  const ServiceConfig& config() const { return config_; }
  DataStore& store() { return store_; }

 private:
  ApiResponse post_players(const ApiRequest& request, Timestamp now);
  ApiResponse get_stats(const ApiRequest& request, const std::string& player_id,
                        Timestamp now);
  ApiResponse get_notifications(const ApiRequest& request,
                                const std::string& player_id, Timestamp now);
  ApiResponse post_sessions(const ApiRequest& request, Timestamp now);
  ApiResponse get_session(const ApiRequest& request, const std::string& session_id,
                          Timestamp now);
  ApiResponse post_answer(const ApiRequest& request, const std::string& session_id,
                          Timestamp now);
  ApiResponse post_hint(const ApiRequest& request, const std::string& session_id,
                        Timestamp now);
  ApiResponse post_reset(const std::string& player_id, Timestamp now);
  ApiResponse post_verify(const ApiRequest& request, const std::string& player_id,
                          const std::string& attempt_id, Timestamp now);

  Timestamp request_time(const ApiRequest& request) const;
  void authorize(const ApiRequest& request, std::string_view player_id,
                 Timestamp now);
  std::string issue_token(std::string_view player_id, Timestamp now);

  std::uint64_t next_seed(std::string_view purpose);
  std::shared_ptr<std::mutex> player_mutex(std::string_view player_id);
  PlayerRecord require_player(std::string_view player_id) const;
  AvatarProfile require_profile(const PlayerRecord& record) const;
  SessionState load_session(std::string_view session_id);
  void commit(SessionState state, std::span<const GameEvent> events,
              PlayerRecord& record);

  const ContentPack& content() const { return *config_.content; }

  ServiceConfig config_;
  Clock clock_;
  DataStore store_;
  std::atomic<std::uint64_t> seed_counter_{0};

  std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<std::mutex>, std::less<>> player_locks_;
  std::map<std::string, SessionState, std::less<>> sessions_;
};

}  // namespace avatar_game::api

#endif  // AVATAR_GAME_API_SERVICE_H_
