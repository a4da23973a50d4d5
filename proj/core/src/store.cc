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

#include "avatar_game/store.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "avatar_game/error.h"
#include "avatar_game/serialization.h"

namespace avatar_game {
namespace fs = std::filesystem;
namespace {

void check_id(std::string_view id) {
  if (!is_safe_id(id)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid id '" + std::string(id) + "'");
  }
}

[[noreturn]] void io_failure(const std::string& what, const fs::path& path) {
  throw Error(ErrorCode::kIoError,
              what + " " + path.string() + ": " + std::strerror(errno));
}

void write_all(int fd, std::string_view data, const fs::path& path) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      io_failure("write", path);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

// Write-then-rename so readers never see a torn snapshot.
void write_document(const fs::path& path, const json& doc) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) io_failure("open", tmp);
  write_all(fd, doc.dump(2) + "\n", tmp);
  if (::fsync(fd) != 0) {
    ::close(fd);
    io_failure("fsync", tmp);
  }
  ::close(fd);
  fs::rename(tmp, path);
}

// Drops a trailing record that lacks its newline (an append torn by a crash),
// so the next append starts on a fresh line.
void repair_tail(const fs::path& path) {
  std::error_code ec;
  const auto size = fs::file_size(path, ec);
  if (ec || size == 0) return;
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.back() == '\n') return;
  const auto keep = content.rfind('\n');
  fs::resize_file(path, keep == std::string::npos ? 0 : keep + 1);
}

std::optional<json> read_document(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

}  // namespace

bool is_safe_id(std::string_view id) noexcept {
  if (id.empty() || id.size() > 128 || id.front() == '.') return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

DataStore::DataStore(fs::path root) : root_(std::move(root)) {
  for (const char* sub : {"players", "profiles", "auth", "sessions", "tokens"}) {
    fs::create_directories(root_ / sub);
  }
}

fs::path DataStore::player_path(std::string_view id) const {
  check_id(id);
  return root_ / "players" / (std::string(id) + ".json");
}

fs::path DataStore::profile_path(std::string_view id) const {
  check_id(id);
  return root_ / "profiles" / (std::string(id) + ".json");
}

fs::path DataStore::auth_path(std::string_view id) const {
  check_id(id);
  return root_ / "auth" / (std::string(id) + ".json");
}

fs::path DataStore::session_path(std::string_view id) const {
  check_id(id);
  return root_ / "sessions" / (std::string(id) + ".log");
}

fs::path DataStore::token_path(std::string_view id) const {
  check_id(id);
  return root_ / "tokens" / (std::string(id) + ".json");
}

void DataStore::save_token(const TokenRecord& token) {
  write_document(token_path(token.token),
                 json{{"player_id", token.player_id},
                      {"expires_at", format_timestamp(token.expires_at)}});
}

std::optional<TokenRecord> DataStore::load_token(std::string_view token) const {
  if (!is_safe_id(token)) return std::nullopt;
  auto doc = read_document(token_path(token));
  if (!doc) return std::nullopt;
  auto expires = parse_timestamp(doc->at("expires_at").get<std::string>());
  if (!expires) return std::nullopt;
  return TokenRecord{std::string(token), doc->at("player_id").get<std::string>(),
                     *expires};
}

void DataStore::save_player(const PlayerRecord& record) {
  write_document(player_path(record.player_id), record);
}

std::optional<PlayerRecord> DataStore::load_player(std::string_view player_id) const {
  if (!is_safe_id(player_id)) return std::nullopt;
  auto doc = read_document(player_path(player_id));
  if (!doc) return std::nullopt;
  return doc->get<PlayerRecord>();
}

std::vector<std::string> DataStore::player_ids() const {
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(root_ / "players")) {
    if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void DataStore::save_profile(const AvatarProfile& profile) {
  write_document(profile_path(profile.profile_id), profile);
}

std::optional<AvatarProfile> DataStore::load_profile(std::string_view profile_id) const {
  if (!is_safe_id(profile_id)) return std::nullopt;
  auto doc = read_document(profile_path(profile_id));
  if (!doc) return std::nullopt;
  return doc->get<AvatarProfile>();
}

void DataStore::save_auth_ledger(const AuthLedger& ledger) {
  write_document(auth_path(ledger.player_id), ledger);
}

AuthLedger DataStore::load_auth_ledger(std::string_view player_id) const {
  auto doc = read_document(auth_path(player_id));
  if (!doc) return AuthLedger{std::string(player_id), {}, std::nullopt};
  return doc->get<AuthLedger>();
}

std::uint64_t DataStore::last_seq_locked(std::string_view session_id) const {
  auto it = last_seq_cache_.find(session_id);
  if (it != last_seq_cache_.end()) return it->second;
  const auto events = read_events(session_id);
  const std::uint64_t last = events.empty() ? 0 : events.back().seq;
  last_seq_cache_.emplace(std::string(session_id), last);
  return last;
}

std::uint64_t DataStore::last_seq(std::string_view session_id) const {
  std::lock_guard lock(log_mutex_);
  return last_seq_locked(session_id);
}

void DataStore::append_event(std::string_view session_id, const GameEvent& event) {
  const fs::path path = session_path(session_id);
  std::lock_guard lock(log_mutex_);
  if (last_seq_cache_.find(session_id) == last_seq_cache_.end()) repair_tail(path);
  const std::uint64_t last = last_seq_locked(session_id);
  if (event.seq != last + 1) {
    throw Error(ErrorCode::kSequenceGap,
                "session '" + std::string(session_id) + "' expects seq " +
                    std::to_string(last + 1) + ", got " + std::to_string(event.seq));
  }
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) io_failure("open", path);
  write_all(fd, json(event).dump() + "\n", path);
  if (::fdatasync(fd) != 0) {
    ::close(fd);
    io_failure("fdatasync", path);
  }
  ::close(fd);
  last_seq_cache_[std::string(session_id)] = event.seq;
}

std::vector<GameEvent> DataStore::read_events(std::string_view session_id) const {
  std::ifstream in(session_path(session_id), std::ios::binary);
  std::vector<GameEvent> events;
  if (!in) return events;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t start = 0;
  while (start < content.size()) {
    const std::size_t end = content.find('\n', start);
    if (end == std::string::npos) {
      // A record without its newline was cut off by a crash mid-append and was
      // never acknowledged.
      break;
    }
    const std::string_view line(content.data() + start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    try {
      events.push_back(json::parse(line).get<GameEvent>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  "session log '" + std::string(session_id) + "': " + e.what());
    }
  }
  return events;
}

bool DataStore::has_session(std::string_view session_id) const {
  return is_safe_id(session_id) && fs::exists(session_path(session_id));
}

}  // namespace avatar_game
