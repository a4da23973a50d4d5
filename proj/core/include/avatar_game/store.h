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

#ifndef AVATAR_GAME_STORE_H_
#define AVATAR_GAME_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/auth.h"
#include "avatar_game/avatar.h"
#include "avatar_game/clock.h"
#include "avatar_game/game_events.h"
#include "avatar_game/persuasion.h"

namespace avatar_game {

struct PlayerRecord {
  std::string player_id;
  std::string profile_id;
  Timestamp enrolled_at{};
  ActivityLog activity;
  std::map<Date, std::vector<BadgeKind>> badges_by_day;
  std::int64_t lifetime_score = 0;
  std::vector<std::string> session_ids;
  std::vector<DatedVerdict> recognition_history;

  bool operator==(const PlayerRecord&) const = default;
};

// Bearer token issued to a player by the service.
struct TokenRecord {
  std::string token;
  std::string player_id;
  Timestamp expires_at{};

  bool operator==(const TokenRecord&) const = default;
};

// Single-writer embedded store rooted at a directory:
//
//   players/<id>.json     snapshot documents, replaced atomically
//   profiles/<id>.json
//   auth/<player>.json
//   tokens/<token>.json
//   sessions/<id>.log     append-only, one JSON event per line
//
// Event appends are serialized internally; snapshot writers must be
// serialized per player by the caller.
class DataStore {
 public:
  explicit DataStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  void save_player(const PlayerRecord& record);
  std::optional<PlayerRecord> load_player(std::string_view player_id) const;
  std::vector<std::string> player_ids() const;

  void save_profile(const AvatarProfile& profile);
  std::optional<AvatarProfile> load_profile(std::string_view profile_id) const;

  void save_auth_ledger(const AuthLedger& ledger);
  AuthLedger load_auth_ledger(std::string_view player_id) const;

  void save_token(const TokenRecord& token);
  std::optional<TokenRecord> load_token(std::string_view token) const;

  // Durable append. The first event of a session must carry seq 1 and each
  // later one last seq + 1; otherwise throws kSequenceGap.
  void append_event(std::string_view session_id, const GameEvent& event);
  std::vector<GameEvent> read_events(std::string_view session_id) const;
  bool has_session(std::string_view session_id) const;
  std::uint64_t last_seq(std::string_view session_id) const;

 private:
  std::filesystem::path player_path(std::string_view id) const;
  std::filesystem::path profile_path(std::string_view id) const;
  std::filesystem::path auth_path(std::string_view id) const;
  std::filesystem::path session_path(std::string_view id) const;
  std::filesystem::path token_path(std::string_view id) const;
  std::uint64_t last_seq_locked(std::string_view session_id) const;

  std::filesystem::path root_;
  mutable std::mutex log_mutex_;
  mutable std::map<std::string, std::uint64_t, std::less<>> last_seq_cache_;
};

// Rejects ids that are empty or could escape the store directory.
bool is_safe_id(std::string_view id) noexcept;

}  // namespace avatar_game

#endif  // AVATAR_GAME_STORE_H_
