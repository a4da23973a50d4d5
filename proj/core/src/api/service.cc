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

#include "avatar_game/api/service.h"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <regex>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"
#include "avatar_game/serialization.h"

namespace avatar_game::api {
namespace {

std::string hex64(std::uint64_t value) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

ApiResponse error_response(ErrorCode code, const std::string& message) {
  return {http_status(code),
          {{"error", {{"code", code_name(code)}, {"message", message}}}}};
}

json parse_body(const ApiRequest& request) {
  if (request.body.empty()) return json::object();
  try {
    json body = json::parse(request.body);
    if (!body.is_object()) {
      throw Error(ErrorCode::kParseError, "request body must be a JSON object");
    }
    return body;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

json attribute_summary(const ContentPack& content) {
  json out = json::array();
  for (const auto& attr : content.schema().attributes()) {
    out.push_back({{"attribute_id", attr.attribute_id},
                   {"question", attr.display_question}});
  }
  return out;
}

std::optional<std::uint64_t> presented_seq_of(const json& body) {
  if (!body.contains("presented_seq") || body.at("presented_seq").is_null()) {
    return std::nullopt;
  }
  return body.at("presented_seq").get<std::uint64_t>();
}

json session_summary(const SessionState& state) {
  json badges = json::array();
  for (const auto& b : state.badges) badges.push_back(to_string(b.kind));
  json out = {{"session_id", state.session_id},
              {"player_id", state.player_id},
              {"phase", to_string(state.phase)},
              {"score", state.score},
              {"recognition_done", state.recognition_done},
              {"recall_done", state.recall_done},
              {"standard_remaining", state.standard_pool.size()},
              {"badges", badges},
              {"ended", state.phase == Phase::kEnded}};
  if (state.pending) {
    out["view"] = client_view(state.pending->view);
    out["presented_seq"] = state.pending->presented_seq;
  } else {
    out["view"] = nullptr;
    out["presented_seq"] = nullptr;
  }
  return out;
}

// Derived events safe to show the player. Submissions are the player's own
// text; nothing here carries an expected answer.
json event_summary(const GameEvent& event) {
  json out = {{"seq", event.seq}, {"kind", to_string(event.kind())}};
  if (const auto* b = event.as<BadgeAwarded>()) out["badge"] = to_string(b->badge);
  if (const auto* m = event.as<MilestoneReached>()) {
    out["milestone"] = to_string(m->milestone);
  }
  if (const auto* a = event.as<ChallengeAnswered>()) {
    out["challenge_id"] = a->challenge_id;
    out["correct"] = a->correct;
    out["points"] = a->points;
  }
  return out;
}

std::string lower(std::string text) {
  for (char& c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return text;
}

// Session ids are "<player>-s<n>"; the owner is checked before the store is
// touched so that unauthenticated callers cannot probe for sessions.
std::string session_owner(const std::string& session_id) {
  const auto cut = session_id.rfind("-s");
  return cut == std::string::npos ? std::string() : session_id.substr(0, cut);
}

}  // namespace

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
      return 400;
    case ErrorCode::kUnauthorized:
      return 401;
    case ErrorCode::kNotFound:
    case ErrorCode::kNotEnrolled:
    case ErrorCode::kUnknownAttempt:
      return 404;
    case ErrorCode::kSessionEnded:
    case ErrorCode::kNoPendingChallenge:
    case ErrorCode::kInsufficientPoints:
    case ErrorCode::kAttemptAlreadyResolved:
    case ErrorCode::kSequenceGap:
      return 409;
    case ErrorCode::kStaleChallenge:
      return 412;
    case ErrorCode::kEmptyAnswer:
    case ErrorCode::kHintInapplicable:
    case ErrorCode::kIncompleteSubmission:
    case ErrorCode::kInvalidPhase:
    case ErrorCode::kAnswerTooLong:
    case ErrorCode::kUnrepresentableAnswer:
      return 422;
    case ErrorCode::kLockedOut:
      return 423;
    default:
      return 500;
  }
}

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig config;
  if (const char* port = std::getenv("AVATAR_GAME_PORT")) config.port = std::atoi(port);
  if (const char* host = std::getenv("AVATAR_GAME_HOST")) config.host = host;
  if (const char* dir = std::getenv("AVATAR_GAME_DATA_DIR")) config.data_dir = dir;
  if (const char* seed = std::getenv("AVATAR_GAME_SEED"); seed && *seed) {
    config.seed_override = std::strtoull(seed, nullptr, 10);
  }
  if (const char* pack = std::getenv("AVATAR_GAME_CONTENT"); pack && *pack) {
    config.content = std::make_shared<const ContentPack>(load_content_pack(pack));
  } else {
    config.content = std::make_shared<const ContentPack>(sample_content_pack());
  }
  return config;
}

GameService::GameService(ServiceConfig config, Clock clock)
    : config_(std::move(config)), clock_(std::move(clock)), store_(config_.data_dir) {
  if (!config_.content) {
    config_.content = std::make_shared<const ContentPack>(sample_content_pack());
  }
  config_.verify_policy.validate(content().schema().attributes().size());
}

std::uint64_t GameService::next_seed(std::string_view purpose) {
  if (config_.seed_override) {
    return derive_seed(derive_seed(*config_.seed_override, purpose),
                       seed_counter_.fetch_add(1));
  }
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

Timestamp GameService::request_time(const ApiRequest& request) const {
  if (config_.seed_override) {
    auto it = request.headers.find("x-test-now");
    if (it != request.headers.end()) {
      if (auto t = parse_timestamp(it->second)) return *t;
      throw Error(ErrorCode::kInvalidArgument, "bad X-Test-Now timestamp");
    }
  }
  return clock_();
}

std::shared_ptr<std::mutex> GameService::player_mutex(std::string_view player_id) {
  std::lock_guard lock(registry_mutex_);
  auto it = player_locks_.find(player_id);
  if (it == player_locks_.end()) {
    it = player_locks_.emplace(std::string(player_id), std::make_shared<std::mutex>())
             .first;
  }
  return it->second;
}

std::string GameService::issue_token(std::string_view player_id, Timestamp now) {
  const std::string token =
      hex64(next_seed("token")) + hex64(next_seed("token-tail"));
  store_.save_token({token, std::string(player_id), now + config_.token_ttl});
  return token;
}

void GameService::authorize(const ApiRequest& request, std::string_view player_id,
                            Timestamp now) {
  // Every failure looks the same to the caller.
  const Error denied(ErrorCode::kUnauthorized, "missing, invalid or expired token");
  auto it = request.headers.find("authorization");
  if (it == request.headers.end()) throw denied;
  constexpr std::string_view kBearer = "Bearer ";
  const std::string& value = it->second;
  if (value.compare(0, kBearer.size(), kBearer) != 0) throw denied;
  const auto token = store_.load_token(std::string_view(value).substr(kBearer.size()));
  if (!token || token->player_id != player_id || now >= token->expires_at) throw denied;
}

PlayerRecord GameService::require_player(std::string_view player_id) const {
  auto record = store_.load_player(player_id);
  if (!record) {
    throw Error(ErrorCode::kNotFound, "no player '" + std::string(player_id) + "'");
  }
  return *record;
}

AvatarProfile GameService::require_profile(const PlayerRecord& record) const {
  auto profile = store_.load_profile(record.profile_id);
  if (!profile) {
    throw Error(ErrorCode::kNotEnrolled,
                "player '" + record.player_id + "' has no avatar profile");
  }
  return *profile;
}

SessionState GameService::load_session(std::string_view session_id) {
  {
    std::lock_guard lock(registry_mutex_);
    auto it = sessions_.find(session_id);
    if (it != sessions_.end()) return it->second;
  }
  if (!store_.has_session(session_id)) {
    throw Error(ErrorCode::kNotFound, "no session '" + std::string(session_id) + "'");
  }
  const auto events = store_.read_events(session_id);
  if (events.empty() || events.front().as<SessionStarted>() == nullptr) {
    throw Error(ErrorCode::kNotFound, "no session '" + std::string(session_id) + "'");
  }
  const auto record = require_player(events.front().as<SessionStarted>()->player_id);
  SessionState state = replay_session(events, content(), require_profile(record));
  std::lock_guard lock(registry_mutex_);
  sessions_.insert_or_assign(std::string(session_id), state);
  return state;
}

void GameService::commit(SessionState state, std::span<const GameEvent> events,
                         PlayerRecord& record) {
  for (const auto& event : events) store_.append_event(state.session_id, event);
  record.activity = record_events(std::move(record.activity), events);
  for (const auto& event : events) {
    if (const auto* answered = event.as<ChallengeAnswered>()) {
      record.lifetime_score += answered->points;
      if (answered->kind == ChallengeKind::kRecognition) {
        record.recognition_history.push_back({date_of(event.at), answered->correct});
      }
    } else if (const auto* hint = event.as<HintPurchased>()) {
      record.lifetime_score -= hint->cost;
    } else if (const auto* badge = event.as<BadgeAwarded>()) {
      record.badges_by_day[date_of(event.at)].push_back(badge->badge);
    }
  }
  store_.save_player(record);
  std::lock_guard lock(registry_mutex_);
  sessions_.insert_or_assign(state.session_id, std::move(state));
}

CreatedPlayer GameService::create_player(Timestamp now) {
  const std::uint64_t seed = next_seed("player");
  CreatedPlayer created;
  created.profile = generate_profile(derive_seed(seed, "profile"), content().schema(), now);
  created.record.player_id = "p" + hex64(derive_seed(seed, "player-id"));
  created.record.profile_id = created.profile.profile_id;
  created.record.enrolled_at = now;
  created.record.activity.player_id = created.record.player_id;
  auto lock = player_mutex(created.record.player_id);
  std::lock_guard guard(*lock);
  store_.save_profile(created.profile);
  store_.save_player(created.record);
  created.token = issue_token(created.record.player_id, now);
  created.token_expires_at = now + config_.token_ttl;
  return created;
}

ApiResponse GameService::post_players(const ApiRequest& request, Timestamp now) {
  const json body = parse_body(request);
  const bool reveal = body.value("reveal_profile", false);
  const CreatedPlayer created = create_player(now);
  json profile = {{"profile_id", created.profile.profile_id},
                  {"attributes", attribute_summary(content())}};
  if (reveal) profile["values"] = created.profile.assignments;
  return {201,
          {{"player_id", created.record.player_id},
           {"token", created.token},
           {"token_expires_at", format_timestamp(created.token_expires_at)},
           {"profile", profile}}};
}

ApiResponse GameService::get_stats(const ApiRequest& request,
                                   const std::string& player_id, Timestamp now) {
  authorize(request, player_id, now);
  StatsRange range = StatsRange::kDay;
  if (auto it = request.query.find("range"); it != request.query.end()) {
    auto parsed = stats_range_from(it->second);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument, "range must be day, week or month");
    }
    range = *parsed;
  }
  auto lock = player_mutex(player_id);
  std::lock_guard guard(*lock);
  const PlayerRecord record = require_player(player_id);
  std::vector<GameEvent> events;
  for (const auto& session_id : record.session_ids) {
    auto log = store_.read_events(session_id);
    events.insert(events.end(), log.begin(), log.end());
  }
  return {200, json(stats(events, range, now))};
}

ApiResponse GameService::get_notifications(const ApiRequest& request,
                                           const std::string& player_id,
                                           Timestamp now) {
  authorize(request, player_id, now);
  auto lock = player_mutex(player_id);
  std::lock_guard guard(*lock);
  PlayerRecord record = require_player(player_id);
  json notes = json::array();
  const auto note = next_notification(record.activity, now, content().messages(),
                                      derive_seed(fnv1a64(player_id),
                                                  static_cast<std::uint64_t>(
                                                      now.time_since_epoch().count())));
  if (note) {
    notes.push_back({{"kind", to_string(note->kind)},
                     {"text", note->text},
                     {"hours_absent", note->hours_absent}});
    record.activity = mark_notified(std::move(record.activity), now);
    store_.save_player(record);
  }
  return {200,
          {{"notifications", notes},
           {"free_hint_due", free_hint_due(record.activity, now)}}};
}

ApiResponse GameService::post_sessions(const ApiRequest& request, Timestamp now) {
  const json body = parse_body(request);
  if (!body.contains("player_id") || !body.at("player_id").is_string()) {
    throw Error(ErrorCode::kInvalidArgument, "player_id is required");
  }
  const std::string player_id = body.at("player_id").get<std::string>();
  authorize(request, player_id, now);
  auto lock = player_mutex(player_id);
  std::lock_guard guard(*lock);
  PlayerRecord record = require_player(player_id);
  const AvatarProfile profile = require_profile(record);

  const Date today = date_of(now);
  SessionOptions options;
  options.session_id = player_id + "-s" + std::to_string(record.session_ids.size() + 1);
  options.daily_quota = config_.daily_quota;
  if (auto it = record.activity.correct_avatar_by_day.find(today);
      it != record.activity.correct_avatar_by_day.end()) {
    options.avatar_solved_today = it->second;
  }
  if (auto it = record.badges_by_day.find(today); it != record.badges_by_day.end()) {
    options.badges_today = it->second;
  }
  const bool returning = is_return_visit(record.activity, now);
  SessionState state = start_session(player_id, content(), profile,
                                     next_seed(options.session_id), now, options);
  record.session_ids.push_back(state.session_id);
  const auto events = state.event_log;
  commit(state, events, record);

  json messages = json::array();
  if (returning) {
    const auto message = social_message(SocialMessageKind::kReturnCongratulation,
                                        state.rng_seed, content().messages());
    messages.push_back({{"kind", to_string(message.kind)}, {"text", message.text}});
  }
  json out = session_summary(state);
  out["messages"] = messages;
  return {201, out};
}

ApiResponse GameService::get_session(const ApiRequest& request,
                                     const std::string& session_id, Timestamp now) {
  authorize(request, session_owner(session_id), now);
  const SessionState state = load_session(session_id);
  if (state.player_id != session_owner(session_id)) {
    throw Error(ErrorCode::kNotFound, "no session '" + session_id + "'");
  }
  return {200, session_summary(state)};
}

ApiResponse GameService::post_answer(const ApiRequest& request,
                                     const std::string& session_id, Timestamp now) {
  const std::string owner = session_owner(session_id);
  authorize(request, owner, now);
  const json body = parse_body(request);
  if (!body.contains("text") || !body.at("text").is_string()) {
    throw Error(ErrorCode::kInvalidArgument, "text is required");
  }
  auto lock = player_mutex(owner);
  std::lock_guard guard(*lock);
  const SessionState state = load_session(session_id);
  if (state.player_id != owner) {
    throw Error(ErrorCode::kNotFound, "no session '" + session_id + "'");
  }
  if (state.phase == Phase::kEnded) {
    throw Error(ErrorCode::kSessionEnded, "session '" + session_id + "' has ended");
  }
  if (auto seq = presented_seq_of(body);
      seq && state.pending && *seq != state.pending->presented_seq) {
    throw Error(ErrorCode::kStaleChallenge,
                "challenge " + std::to_string(*seq) + " is no longer pending");
  }
  PlayerRecord record = require_player(owner);
  const AvatarProfile profile = require_profile(record);
  SubmitResult result =
      submit(state, content(), profile, body.at("text").get<std::string>(), now);
  commit(result.state, result.events, record);

  json events = json::array();
  json messages = json::array();
  std::uint64_t message_seed = result.state.rng_seed;
  for (const auto& event : result.events) {
    if (event.kind() != EventKind::kPresented) events.push_back(event_summary(event));
    if (auto kind = message_kind_for(event)) {
      const auto message = social_message(*kind, derive_seed(message_seed, event.seq),
                                          content().messages());
      messages.push_back({{"kind", to_string(message.kind)},
                          {"text", message.text},
                          {"celebrate", message.celebrate}});
    }
  }
  json out = session_summary(result.state);
  out["verdict"] = {{"correct", result.verdict.correct}};
  out["events"] = events;
  out["messages"] = messages;
  return {200, out};
}

ApiResponse GameService::post_hint(const ApiRequest& request,
                                   const std::string& session_id, Timestamp now) {
  const std::string owner = session_owner(session_id);
  authorize(request, owner, now);
  const json body = parse_body(request);
  const auto kind = hint_kind_from(body.value("kind", ""));
  if (!kind) {
    throw Error(ErrorCode::kInvalidArgument,
                "kind must be reveal_letter, unlock_cues or eliminate_options");
  }
  auto lock = player_mutex(owner);
  std::lock_guard guard(*lock);
  const SessionState state = load_session(session_id);
  if (state.player_id != owner) {
    throw Error(ErrorCode::kNotFound, "no session '" + session_id + "'");
  }
  if (auto seq = presented_seq_of(body);
      seq && state.pending && *seq != state.pending->presented_seq) {
    throw Error(ErrorCode::kStaleChallenge,
                "challenge " + std::to_string(*seq) + " is no longer pending");
  }
  PlayerRecord record = require_player(owner);
  const AvatarProfile profile = require_profile(record);
  const bool free = free_hint_due(record.activity, now);
  HintResult result = free ? grant_free_hint(state, content(), profile, *kind, now)
                           : buy_hint(state, content(), profile, *kind, now);
  if (free) record.activity = consume_free_hint(std::move(record.activity));
  const std::vector<GameEvent> events{result.event};
  commit(result.state, events, record);
  json out = session_summary(result.state);
  out["free"] = free;
  out["cost"] = free ? 0 : hint_cost(state.phase);
  return {200, out};
}

ApiResponse GameService::post_reset(const std::string& player_id, Timestamp now) {
  auto lock = player_mutex(player_id);
  std::lock_guard guard(*lock);
  auto record = store_.load_player(player_id);
  if (!record) {
    throw Error(ErrorCode::kNotEnrolled, "player '" + player_id + "' is not enrolled");
  }
  const auto profile = store_.load_profile(record->profile_id);
  AuthLedger ledger = store_.load_auth_ledger(player_id);
  const ResetAttempt attempt =
      begin_reset(ledger, profile ? &*profile : nullptr, config_.verify_policy,
                  next_seed("reset"), now);
  store_.save_auth_ledger(ledger);
  json questions = json::array();
  for (const auto& attribute_id : attempt.questions) {
    questions.push_back(
        {{"attribute_id", attribute_id},
         {"question", content().schema().has_attribute(attribute_id)
                          ? content().schema().attribute(attribute_id).display_question
                          : attribute_id}});
  }
  return {201, {{"attempt_id", attempt.attempt_id}, {"questions", questions}}};
}

ApiResponse GameService::post_verify(const ApiRequest& request,
                                     const std::string& player_id,
                                     const std::string& attempt_id, Timestamp now) {
  const json body = parse_body(request);
  std::map<std::string, std::string> answers;
  if (body.contains("answers")) {
    if (!body.at("answers").is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "answers must be an object");
    }
    for (const auto& [key, value] : body.at("answers").items()) {
      if (!value.is_string()) {
        throw Error(ErrorCode::kInvalidArgument, "answers must be strings");
      }
      answers[key] = value.get<std::string>();
    }
  }
  auto lock = player_mutex(player_id);
  std::lock_guard guard(*lock);
  auto record = store_.load_player(player_id);
  if (!record) {
    throw Error(ErrorCode::kNotEnrolled, "player '" + player_id + "' is not enrolled");
  }
  const AvatarProfile profile = require_profile(*record);
  AuthLedger ledger = store_.load_auth_ledger(player_id);
  const ResetOutcome outcome =
      verify(ledger, attempt_id, answers, profile, config_.verify_policy, now);
  store_.save_auth_ledger(ledger);
  json out = {{"attempt_id", attempt_id}, {"outcome", to_string(outcome)}};
  if (ledger.locked_until && outcome == ResetOutcome::kLocked) {
    out["locked_until"] = format_timestamp(*ledger.locked_until);
  }
  return {200, out};
}

ApiResponse GameService::handle(const ApiRequest& request) {
  static const std::regex kPlayerStats(R"(^/players/([^/]+)/stats$)");
  static const std::regex kPlayerNotes(R"(^/players/([^/]+)/notifications$)");
  static const std::regex kSession(R"(^/sessions/([^/]+)$)");
  static const std::regex kAnswer(R"(^/sessions/([^/]+)/answer$)");
  static const std::regex kHint(R"(^/sessions/([^/]+)/hint$)");
  static const std::regex kReset(R"(^/auth/([^/]+)/reset$)");
  static const std::regex kVerify(R"(^/auth/([^/]+)/reset/([^/]+)/verify$)");

  ApiRequest normalized = request;
  normalized.headers.clear();
  for (const auto& [name, value] : request.headers) normalized.headers[lower(name)] = value;

  try {
    const Timestamp now = request_time(normalized);
    const std::string& path = normalized.path;
    const std::string& method = normalized.method;
    std::smatch m;
    if (method == "POST" && path == "/players") return post_players(normalized, now);
    if (method == "POST" && path == "/sessions") return post_sessions(normalized, now);
    if (method == "GET" && std::regex_match(path, m, kPlayerStats)) {
      return get_stats(normalized, m[1], now);
    }
    if (method == "GET" && std::regex_match(path, m, kPlayerNotes)) {
      return get_notifications(normalized, m[1], now);
    }
    if (method == "GET" && std::regex_match(path, m, kSession)) {
      return get_session(normalized, m[1], now);
    }
    if (method == "POST" && std::regex_match(path, m, kAnswer)) {
      return post_answer(normalized, m[1], now);
    }
    if (method == "POST" && std::regex_match(path, m, kHint)) {
      return post_hint(normalized, m[1], now);
    }
    if (method == "POST" && std::regex_match(path, m, kReset)) {
      return post_reset(m[1], now);
    }
    if (method == "POST" && std::regex_match(path, m, kVerify)) {
      return post_verify(normalized, m[1], m[2], now);
    }
    return error_response(ErrorCode::kNotFound, "no route for " + method + " " + path);
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const json::exception& e) {
    return error_response(ErrorCode::kParseError, e.what());
  } catch (const std::exception& e) {
    return {500, {{"error", {{"code", "Internal"}, {"message", e.what()}}}}};
  }
}

}  // namespace avatar_game::api
