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

#include "avatar_game/serialization.h"

#include <type_traits>

#include "avatar_game/error.h"

namespace avatar_game {
namespace {

json time_json(Timestamp t) { return format_timestamp(t); }

Timestamp time_from(const json& j) {
  auto t = parse_timestamp(j.get<std::string>());
  if (!t) {
    throw Error(ErrorCode::kParseError, "bad timestamp '" + j.get<std::string>() + "'");
  }
  return *t;
}

Date date_from(const std::string& text) {
  auto d = parse_date(text);
  if (!d) throw Error(ErrorCode::kParseError, "bad date '" + text + "'");
  return *d;
}

json optional_time(const std::optional<Timestamp>& t) {
  return t ? time_json(*t) : json(nullptr);
}

std::optional<Timestamp> optional_time_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return time_from(j.at(key));
}

template <typename E, typename Parse>
E enum_from(const json& j, Parse parse, const char* what) {
  const auto text = j.get<std::string>();
  auto value = parse(text);
  if (!value) {
    throw Error(ErrorCode::kParseError,
                std::string("unknown ") + what + " '" + text + "'");
  }
  return *value;
}

ChallengeKind kind_from(const json& j) {
  return enum_from<ChallengeKind>(j, challenge_kind_from, "challenge kind");
}
HintKind hint_from(const json& j) {
  return enum_from<HintKind>(j, hint_kind_from, "hint kind");
}
BadgeKind badge_from(const json& j) {
  return enum_from<BadgeKind>(j, badge_kind_from, "badge kind");
}

template <std::size_t N>
std::array<std::string, N> fixed_array(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must hold exactly " +
                                            std::to_string(N) + " entries");
  }
  std::array<std::string, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = j[i].get<std::string>();
  return out;
}

json badge_kinds_json(const std::vector<BadgeKind>& kinds) {
  json out = json::array();
  for (auto k : kinds) out.push_back(to_string(k));
  return out;
}

std::vector<BadgeKind> badge_kinds_from(const json& j) {
  std::vector<BadgeKind> out;
  for (const auto& k : j) out.push_back(badge_from(k));
  return out;
}

}  // namespace

void to_json(json& j, const AttributeDescriptor& v) {
  j = {{"attribute_id", v.attribute_id},
       {"display_question", v.display_question},
       {"value_pool_ref", v.value_pool_ref}};
}

void from_json(const json& j, AttributeDescriptor& v) {
  v.attribute_id = j.at("attribute_id").get<std::string>();
  v.display_question = j.value("display_question", "");
  v.value_pool_ref = j.at("value_pool_ref").get<std::string>();
}

void to_json(json& j, const ValuePool& v) {
  j = {{"pool_id", v.pool_id}, {"values", v.values}};
}

void from_json(const json& j, ValuePool& v) {
  v.pool_id = j.at("pool_id").get<std::string>();
  v.values = j.at("values").get<std::vector<std::string>>();
}

void to_json(json& j, const AvatarProfile& v) {
  j = {{"profile_id", v.profile_id},
       {"seed", v.seed},
       {"assignments", v.assignments},
       {"created_at", time_json(v.created_at)}};
}

void from_json(const json& j, AvatarProfile& v) {
  v.profile_id = j.at("profile_id").get<std::string>();
  v.seed = j.at("seed").get<std::uint64_t>();
  v.assignments = j.at("assignments").get<std::map<std::string, std::string>>();
  v.created_at = time_from(j.at("created_at"));
}

void to_json(json& j, const StandardChallenge& v) {
  j = {{"id", v.challenge_id},
       {"answer", v.answer},
       {"images", v.images},
       {"cues", v.cues}};
}

void from_json(const json& j, StandardChallenge& v) {
  v.challenge_id = j.at("id").get<std::string>();
  v.answer = j.at("answer").get<std::string>();
  v.images = fixed_array<kImagesPerChallenge>(j.at("images"), "images");
  v.cues = fixed_array<kImagesPerChallenge>(j.at("cues"), "cues");
}

void to_json(json& j, const AvatarChallenge& v) {
  j = {{"id", v.challenge_id},
       {"attribute_id", v.attribute_id},
       {"kind", to_string(v.kind)},
       {"images", v.images},
       {"cues", v.cues}};
  if (v.kind == ChallengeKind::kRecognition) j["option_count"] = v.option_count;
}

void from_json(const json& j, AvatarChallenge& v) {
  v.challenge_id = j.at("id").get<std::string>();
  v.attribute_id = j.at("attribute_id").get<std::string>();
  v.kind = kind_from(j.at("kind"));
  v.images = fixed_array<kImagesPerChallenge>(j.at("images"), "images");
  v.cues = fixed_array<kImagesPerChallenge>(j.at("cues"), "cues");
  v.option_count = j.value("option_count", kDefaultOptionCount);
}

void to_json(json& j, const LetterPool& v) {
  std::string letters(v.letters.begin(), v.letters.end());
  j = {{"letters", letters}, {"seed", v.seed}};
}

void from_json(const json& j, LetterPool& v) {
  const auto letters = j.at("letters").get<std::string>();
  if (letters.size() != kLetterPoolSize) {
    throw Error(ErrorCode::kParseError, "letter pool must hold 12 letters");
  }
  std::copy(letters.begin(), letters.end(), v.letters.begin());
  v.seed = j.at("seed").get<std::uint64_t>();
}

namespace {

json revealed_json(const std::vector<RevealedLetter>& revealed) {
  json out = json::array();
  for (const auto& r : revealed) {
    out.push_back({{"index", r.index}, {"letter", std::string(1, r.letter)}});
  }
  return out;
}

}  // namespace

void to_json(json& j, const ChallengeView& v) {
  j = {{"challenge_id", v.challenge_id},
       {"kind", to_string(v.kind)},
       {"images", v.images},
       {"cues", v.cues},
       {"letter_pool", v.letter_pool ? json(*v.letter_pool) : json(nullptr)},
       {"options", v.options ? json(*v.options) : json(nullptr)},
       {"show_length", v.show_length},
       {"length", v.length ? json(*v.length) : json(nullptr)},
       {"revealed", revealed_json(v.revealed)},
       {"cues_unlocked", v.cues_unlocked}};
}

void from_json(const json& j, ChallengeView& v) {
  v.challenge_id = j.at("challenge_id").get<std::string>();
  v.kind = kind_from(j.at("kind"));
  v.images = fixed_array<kImagesPerChallenge>(j.at("images"), "images");
  v.cues = fixed_array<kImagesPerChallenge>(j.at("cues"), "cues");
  v.letter_pool.reset();
  if (!j.at("letter_pool").is_null()) v.letter_pool = j.at("letter_pool").get<LetterPool>();
  v.options.reset();
  if (!j.at("options").is_null()) {
    v.options = j.at("options").get<std::vector<std::string>>();
  }
  v.show_length = j.at("show_length").get<bool>();
  v.length.reset();
  if (!j.at("length").is_null()) v.length = j.at("length").get<std::size_t>();
  v.revealed.clear();
  for (const auto& r : j.at("revealed")) {
    const auto letter = r.at("letter").get<std::string>();
    v.revealed.push_back({r.at("index").get<std::size_t>(), letter.empty() ? 'A' : letter[0]});
  }
  v.cues_unlocked = j.at("cues_unlocked").get<bool>();
}

json client_view(const ChallengeView& view) {
  json out = {{"challenge_id", view.challenge_id},
              {"kind", to_string(view.kind)},
              {"images", view.images},
              {"show_length", view.show_length},
              {"cues_unlocked", view.cues_unlocked},
              {"revealed", revealed_json(view.revealed)}};
  if (view.letter_pool) {
    out["letters"] =
        std::string(view.letter_pool->letters.begin(), view.letter_pool->letters.end());
  }
  if (view.options) out["options"] = *view.options;
  if (view.show_length && view.length) out["length"] = *view.length;
  if (view.cues_unlocked) out["cues"] = view.cues;
  return out;
}

void to_json(json& j, const Badge& v) {
  j = {{"kind", to_string(v.kind)},
       {"awarded_at", time_json(v.awarded_at)},
       {"avatar_solved_count_at_award", v.avatar_solved_count_at_award}};
}

void from_json(const json& j, Badge& v) {
  v.kind = badge_from(j.at("kind"));
  v.awarded_at = time_from(j.at("awarded_at"));
  v.avatar_solved_count_at_award = j.at("avatar_solved_count_at_award").get<std::uint32_t>();
}

void to_json(json& j, const GameEvent& v) {
  j = {{"seq", v.seq}, {"at", time_json(v.at)}, {"kind", to_string(v.kind())}};
  json payload;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SessionStarted>) {
          payload = {{"session_id", p.session_id},
                     {"player_id", p.player_id},
                     {"pack_id", p.pack_id},
                     {"seed", p.seed},
                     {"daily_quota", p.daily_quota},
                     {"avatar_solved_before", p.avatar_solved_before},
                     {"badges_before", badge_kinds_json(p.badges_before)}};
        } else if constexpr (std::is_same_v<T, ChallengePresented>) {
          payload = {{"challenge_id", p.challenge_id},
                     {"challenge_kind", to_string(p.kind)},
                     {"presentation_seed", p.presentation_seed}};
        } else if constexpr (std::is_same_v<T, ChallengeAnswered>) {
          payload = {{"challenge_id", p.challenge_id},
                     {"challenge_kind", to_string(p.kind)},
                     {"submission", p.submission},
                     {"correct", p.correct},
                     {"points", p.points},
                     {"score_after", p.score_after}};
        } else if constexpr (std::is_same_v<T, HintPurchased>) {
          payload = {{"challenge_id", p.challenge_id},
                     {"hint", to_string(p.hint)},
                     {"cost", p.cost},
                     {"score_after", p.score_after}};
        } else if constexpr (std::is_same_v<T, FreeHintGranted>) {
          payload = {{"challenge_id", p.challenge_id}, {"hint", to_string(p.hint)}};
        } else if constexpr (std::is_same_v<T, BadgeAwarded>) {
          payload = {{"badge", to_string(p.badge)},
                     {"avatar_solved_count", p.avatar_solved_count}};
        } else if constexpr (std::is_same_v<T, MilestoneReached>) {
          payload = {{"milestone", to_string(p.milestone)}};
        } else {
          payload = {{"final_score", p.final_score}};
        }
      },
      v.payload);
  j["payload"] = std::move(payload);
}

void from_json(const json& j, GameEvent& v) {
  v.seq = j.at("seq").get<std::uint64_t>();
  v.at = time_from(j.at("at"));
  const auto kind = j.at("kind").get<std::string>();
  const json& p = j.at("payload");
  if (kind == "session_start") {
    v.payload = SessionStarted{p.at("session_id").get<std::string>(),
                               p.at("player_id").get<std::string>(),
                               p.at("pack_id").get<std::string>(),
                               p.at("seed").get<std::uint64_t>(),
                               p.at("daily_quota").get<std::uint32_t>(),
                               p.at("avatar_solved_before").get<std::uint32_t>(),
                               badge_kinds_from(p.at("badges_before"))};
  } else if (kind == "presented") {
    v.payload = ChallengePresented{p.at("challenge_id").get<std::string>(),
                                   kind_from(p.at("challenge_kind")),
                                   p.at("presentation_seed").get<std::uint64_t>()};
  } else if (kind == "answered") {
    v.payload = ChallengeAnswered{p.at("challenge_id").get<std::string>(),
                                  kind_from(p.at("challenge_kind")),
                                  p.at("submission").get<std::string>(),
                                  p.at("correct").get<bool>(),
                                  p.at("points").get<std::int64_t>(),
                                  p.at("score_after").get<std::int64_t>()};
  } else if (kind == "hint_bought") {
    v.payload = HintPurchased{p.at("challenge_id").get<std::string>(),
                              hint_from(p.at("hint")), p.at("cost").get<std::int64_t>(),
                              p.at("score_after").get<std::int64_t>()};
  } else if (kind == "free_hint") {
    v.payload = FreeHintGranted{p.at("challenge_id").get<std::string>(),
                                hint_from(p.at("hint"))};
  } else if (kind == "badge") {
    v.payload = BadgeAwarded{badge_from(p.at("badge")),
                             p.at("avatar_solved_count").get<std::uint32_t>()};
  } else if (kind == "milestone") {
    v.payload = MilestoneReached{
        enum_from<Milestone>(p.at("milestone"), milestone_from, "milestone")};
  } else if (kind == "session_end") {
    v.payload = SessionFinished{p.at("final_score").get<std::int64_t>()};
  } else {
    throw Error(ErrorCode::kParseError, "unknown event kind '" + kind + "'");
  }
}

void to_json(json& j, const PendingChallenge& v) {
  j = {{"challenge_id", v.challenge_id},
       {"kind", to_string(v.kind)},
       {"presented_seq", v.presented_seq},
       {"view", v.view}};
}

void from_json(const json& j, PendingChallenge& v) {
  v.challenge_id = j.at("challenge_id").get<std::string>();
  v.kind = kind_from(j.at("kind"));
  v.presented_seq = j.at("presented_seq").get<std::uint64_t>();
  v.view = j.at("view").get<ChallengeView>();
}

void to_json(json& j, const SessionState& v) {
  j = {{"session_id", v.session_id},
       {"player_id", v.player_id},
       {"pack_id", v.pack_id},
       {"phase", to_string(v.phase)},
       {"standard_pool", v.standard_pool},
       {"recognition_queue", v.recognition_queue},
       {"recall_queue", v.recall_queue},
       {"recognition_done", v.recognition_done},
       {"recall_done", v.recall_done},
       {"pending", v.pending ? json(*v.pending) : json(nullptr)},
       {"score", v.score},
       {"badges", v.badges},
       {"daily_quota", v.daily_quota},
       {"avatar_solved_today", v.avatar_solved_today},
       {"badges_today", badge_kinds_json(v.badges_today)},
       {"rng_seed", v.rng_seed},
       {"event_log", v.event_log}};
}

void from_json(const json& j, SessionState& v) {
  v.session_id = j.at("session_id").get<std::string>();
  v.player_id = j.at("player_id").get<std::string>();
  v.pack_id = j.at("pack_id").get<std::string>();
  v.phase = enum_from<Phase>(j.at("phase"), phase_from, "phase");
  v.standard_pool = j.at("standard_pool").get<std::vector<std::string>>();
  v.recognition_queue = j.at("recognition_queue").get<std::vector<std::string>>();
  v.recall_queue = j.at("recall_queue").get<std::vector<std::string>>();
  v.recognition_done = j.at("recognition_done").get<std::uint32_t>();
  v.recall_done = j.at("recall_done").get<std::uint32_t>();
  v.pending.reset();
  if (!j.at("pending").is_null()) v.pending = j.at("pending").get<PendingChallenge>();
  v.score = j.at("score").get<std::int64_t>();
  v.badges = j.at("badges").get<std::vector<Badge>>();
  v.daily_quota = j.at("daily_quota").get<std::uint32_t>();
  v.avatar_solved_today = j.at("avatar_solved_today").get<std::uint32_t>();
  v.badges_today = badge_kinds_from(j.at("badges_today"));
  v.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  v.event_log = j.at("event_log").get<std::vector<GameEvent>>();
}

void to_json(json& j, const ActivityLog& v) {
  json by_day = json::object();
  for (const auto& [day, count] : v.correct_avatar_by_day) by_day[format_date(day)] = count;
  j = {{"player_id", v.player_id},
       {"last_played_at", optional_time(v.last_played_at)},
       {"last_reminded_at", optional_time(v.last_reminded_at)},
       {"stuck_since", optional_time(v.stuck_since)},
       {"streak_challenge_id", v.streak_challenge_id},
       {"wrong_streak", v.wrong_streak},
       {"correct_avatar_by_day", by_day}};
}

void from_json(const json& j, ActivityLog& v) {
  v.player_id = j.at("player_id").get<std::string>();
  v.last_played_at = optional_time_from(j, "last_played_at");
  v.last_reminded_at = optional_time_from(j, "last_reminded_at");
  v.stuck_since = optional_time_from(j, "stuck_since");
  v.streak_challenge_id = j.value("streak_challenge_id", "");
  v.wrong_streak = j.value("wrong_streak", 0u);
  v.correct_avatar_by_day.clear();
  for (const auto& [day, count] : j.at("correct_avatar_by_day").items()) {
    v.correct_avatar_by_day[date_from(day)] = count.get<std::uint32_t>();
  }
}

void to_json(json& j, const DatedVerdict& v) {
  j = {{"date", format_date(v.date)}, {"correct", v.correct}};
}

void from_json(const json& j, DatedVerdict& v) {
  v.date = date_from(j.at("date").get<std::string>());
  v.correct = j.at("correct").get<bool>();
}

void to_json(json& j, const StatsReport& v) {
  json buckets = json::array();
  for (const auto& b : v.buckets) {
    buckets.push_back({{"day", format_date(b.day)}, {"correct", b.correct}});
  }
  j = {{"range", to_string(v.range)},
       {"buckets", buckets},
       {"total", v.total},
       {"remaining_to_next_stage", v.remaining_to_next_stage}};
}

void to_json(json& j, const MessageCatalog& v) {
  j = json::object();
  for (auto kind : {SocialMessageKind::kReturnCongratulation,
                    SocialMessageKind::kMilestoneApplause,
                    SocialMessageKind::kWrongAnswerEncouragement,
                    SocialMessageKind::kAbsenceDisappointment}) {
    const auto templates = v.templates(kind);
    if (!templates.empty()) {
      j[std::string(to_string(kind))] =
          std::vector<std::string>(templates.begin(), templates.end());
    }
  }
  const auto reminders = v.reminder_templates();
  if (!reminders.empty()) {
    j["reminder"] = std::vector<std::string>(reminders.begin(), reminders.end());
  }
}

void from_json(const json& j, MessageCatalog& v) {
  v = MessageCatalog{};
  for (const auto& [key, templates] : j.items()) {
    if (key == "reminder") {
      for (const auto& t : templates) v.add_reminder(t.get<std::string>());
      continue;
    }
    auto kind = social_message_kind_from(key);
    if (!kind) throw Error(ErrorCode::kParseError, "unknown message kind '" + key + "'");
    for (const auto& t : templates) v.add(*kind, t.get<std::string>());
  }
}

void to_json(json& j, const ResetAttempt& v) {
  j = {{"attempt_id", v.attempt_id},
       {"player_id", v.player_id},
       {"questions", v.questions},
       {"submitted", v.submitted},
       {"outcome", to_string(v.outcome)},
       {"at", time_json(v.at)},
       {"resolved_at", optional_time(v.resolved_at)}};
}

void from_json(const json& j, ResetAttempt& v) {
  v.attempt_id = j.at("attempt_id").get<std::string>();
  v.player_id = j.at("player_id").get<std::string>();
  v.questions = j.at("questions").get<std::vector<std::string>>();
  v.submitted = j.at("submitted").get<std::map<std::string, std::string>>();
  v.outcome = enum_from<ResetOutcome>(j.at("outcome"), reset_outcome_from, "outcome");
  v.at = time_from(j.at("at"));
  v.resolved_at = optional_time_from(j, "resolved_at");
}

void to_json(json& j, const AuthLedger& v) {
  j = {{"player_id", v.player_id},
       {"attempts", v.attempts},
       {"locked_until", optional_time(v.locked_until)}};
}

void from_json(const json& j, AuthLedger& v) {
  v.player_id = j.at("player_id").get<std::string>();
  v.attempts = j.at("attempts").get<std::vector<ResetAttempt>>();
  v.locked_until = optional_time_from(j, "locked_until");
}

void to_json(json& j, const PlayerRecord& v) {
  json badges = json::object();
  for (const auto& [day, kinds] : v.badges_by_day) {
    badges[format_date(day)] = badge_kinds_json(kinds);
  }
  j = {{"player_id", v.player_id},
       {"profile_id", v.profile_id},
       {"enrolled_at", time_json(v.enrolled_at)},
       {"activity", v.activity},
       {"badges_by_day", badges},
       {"lifetime_score", v.lifetime_score},
       {"session_ids", v.session_ids},
       {"recognition_history", v.recognition_history}};
}

void from_json(const json& j, PlayerRecord& v) {
  v.player_id = j.at("player_id").get<std::string>();
  v.profile_id = j.at("profile_id").get<std::string>();
  v.enrolled_at = time_from(j.at("enrolled_at"));
  v.activity = j.at("activity").get<ActivityLog>();
  v.badges_by_day.clear();
  for (const auto& [day, kinds] : j.at("badges_by_day").items()) {
    v.badges_by_day[date_from(day)] = badge_kinds_from(kinds);
  }
  v.lifetime_score = j.at("lifetime_score").get<std::int64_t>();
  v.session_ids = j.at("session_ids").get<std::vector<std::string>>();
  v.recognition_history = j.at("recognition_history").get<std::vector<DatedVerdict>>();
}

void to_json(json& j, const ContentDocument& v) {
  j = {{"pack_id", v.pack_id},
       {"version", v.version},
       {"standard_challenges", v.standard_challenges},
       {"avatar_challenges", v.avatar_challenges},
       {"attributes", v.attributes},
       {"value_pools", v.value_pools},
       {"messages", v.messages}};
}

void from_json(const json& j, ContentDocument& v) {
  v.pack_id = j.at("pack_id").get<std::string>();
  v.version = j.at("version").get<std::string>();
  v.standard_challenges = j.at("standard_challenges").get<std::vector<StandardChallenge>>();
  v.avatar_challenges = j.at("avatar_challenges").get<std::vector<AvatarChallenge>>();
  v.attributes = j.at("attributes").get<std::vector<AttributeDescriptor>>();
  v.value_pools = j.at("value_pools").get<std::vector<ValuePool>>();
  v.messages = j.contains("messages") ? j.at("messages").get<MessageCatalog>()
                                      : MessageCatalog{};
}

}  // namespace avatar_game
