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

#include "avatar_game/persuasion.h"

#include <algorithm>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"

namespace avatar_game {
namespace {

constexpr std::array<SocialMessageKind, 4> kAllMessageKinds = {
    SocialMessageKind::kReturnCongratulation,
    SocialMessageKind::kMilestoneApplause,
    SocialMessageKind::kWrongAnswerEncouragement,
    SocialMessageKind::kAbsenceDisappointment,
};

std::string render(std::string_view text, std::string_view emoticon) {
  std::string out(text);
  for (auto pos = out.find(kEmoticonToken); pos != std::string::npos;
       pos = out.find(kEmoticonToken, pos + emoticon.size())) {
    out.replace(pos, kEmoticonToken.size(), emoticon);
  }
  return out;
}

const std::string& pick(std::span<const std::string> templates,
                        std::uint64_t seed) {
  Rng rng(seed);
  return templates[static_cast<std::size_t>(rng.below(templates.size()))];
}

}  // namespace

std::string_view to_string(NotificationKind kind) noexcept {
  return kind == NotificationKind::kReminder ? "reminder" : "absence_disappointment";
}

std::string_view to_string(SocialMessageKind kind) noexcept {
  switch (kind) {
    case SocialMessageKind::kReturnCongratulation: return "return_congratulation";
    case SocialMessageKind::kMilestoneApplause: return "milestone_applause";
    case SocialMessageKind::kWrongAnswerEncouragement:
      return "wrong_answer_encouragement";
    case SocialMessageKind::kAbsenceDisappointment: return "absence_disappointment";
  }
  return "return_congratulation";
}

std::optional<SocialMessageKind> social_message_kind_from(
    std::string_view text) noexcept {
  for (auto kind : kAllMessageKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view emoticon_for(SocialMessageKind kind) noexcept {
  switch (kind) {
    case SocialMessageKind::kReturnCongratulation: return "\xF0\x9F\x98\x8A";  // 😊
    case SocialMessageKind::kMilestoneApplause: return "\xF0\x9F\x8E\x89";     // 🎉
    case SocialMessageKind::kWrongAnswerEncouragement:
      return "\xF0\x9F\x92\xAA";  // 💪
    case SocialMessageKind::kAbsenceDisappointment: return "\xF0\x9F\x98\xA2";  // 😢
  }
  return kReminderEmoticon;
}

MessageCatalog MessageCatalog::defaults() {
  MessageCatalog catalog;
  catalog.add(SocialMessageKind::kReturnCongratulation,
              "Welcome back! Your avatar missed you {emoticon}");
  catalog.add(SocialMessageKind::kReturnCongratulation,
              "Great to see you again today {emoticon}");
  catalog.add(SocialMessageKind::kMilestoneApplause,
              "Brilliant, you reached a milestone {emoticon}");
  catalog.add(SocialMessageKind::kMilestoneApplause,
              "Applause! Your avatar is proud of you {emoticon}");
  catalog.add(SocialMessageKind::kWrongAnswerEncouragement,
              "Not quite, but you are getting there {emoticon}");
  catalog.add(SocialMessageKind::kWrongAnswerEncouragement,
              "Keep going, every try makes it stick {emoticon}");
  catalog.add(SocialMessageKind::kAbsenceDisappointment,
              "Your avatar has been waiting for days {emoticon}");
  catalog.add(SocialMessageKind::kAbsenceDisappointment,
              "We missed you. Come back and play {emoticon}");
  catalog.add_reminder("Time for a quick round with your avatar {emoticon}");
  return catalog;
}

void MessageCatalog::add(SocialMessageKind kind, std::string text) {
  if (text.find(kEmoticonToken) == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "message template lacks the {emoticon} token: " + text);
  }
  templates_[kind].push_back(std::move(text));
}

void MessageCatalog::add_reminder(std::string text) {
  if (text.find(kEmoticonToken) == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "reminder template lacks the {emoticon} token: " + text);
  }
  reminders_.push_back(std::move(text));
}

std::span<const std::string> MessageCatalog::templates(
    SocialMessageKind kind) const {
  auto it = templates_.find(kind);
  if (it == templates_.end()) return {};
  return it->second;
}

std::vector<SocialMessageKind> MessageCatalog::missing_kinds() const {
  std::vector<SocialMessageKind> missing;
  for (auto kind : kAllMessageKinds) {
    if (templates(kind).empty()) missing.push_back(kind);
  }
  return missing;
}

ActivityLog record_events(ActivityLog log, std::span<const GameEvent> events) {
  for (const auto& event : events) {
    if (!log.last_played_at || event.at > *log.last_played_at) {
      log.last_played_at = event.at;
    }
    const auto* answered = event.as<ChallengeAnswered>();
    // Standard challenges leave the pool after one answer, so only avatar
    // challenges can collect a streak.
    if (answered == nullptr || !is_avatar_kind(answered->kind)) continue;
    if (answered->correct) {
      ++log.correct_avatar_by_day[date_of(event.at)];
      log.wrong_streak = 0;
      log.streak_challenge_id.clear();
      log.stuck_since.reset();
      continue;
    }
    if (answered->challenge_id == log.streak_challenge_id) {
      ++log.wrong_streak;
    } else {
      log.streak_challenge_id = answered->challenge_id;
      log.wrong_streak = 1;
      log.stuck_since.reset();
    }
    if (log.wrong_streak >= kStuckAfterWrong && !log.stuck_since) {
      log.stuck_since = event.at;
    }
  }
  return log;
}

std::optional<Notification> next_notification(const ActivityLog& log,
                                              Timestamp now,
                                              const MessageCatalog& catalog,
                                              std::uint64_t seed) {
  if (!log.last_played_at) return std::nullopt;
  const auto absent = now - *log.last_played_at;
  if (absent < kReminderInterval) return std::nullopt;
  if (log.last_reminded_at && *log.last_reminded_at >= *log.last_played_at &&
      now - *log.last_reminded_at < kReminderInterval) {
    return std::nullopt;
  }
  Notification note;
  note.hours_absent = std::chrono::duration_cast<std::chrono::hours>(absent).count();
  if (absent >= kDisappointmentAfter) {
    note.kind = NotificationKind::kAbsenceDisappointment;
    note.text =
        social_message(SocialMessageKind::kAbsenceDisappointment, seed, catalog).text;
  } else {
    note.kind = NotificationKind::kReminder;
    const auto reminders = catalog.reminder_templates();
    note.text = reminders.empty()
                    ? render("Time to play with your avatar {emoticon}",
                             kReminderEmoticon)
                    : render(pick(reminders, seed), kReminderEmoticon);
  }
  return note;
}

ActivityLog mark_notified(ActivityLog log, Timestamp now) {
  log.last_reminded_at = now;
  return log;
}

bool free_hint_due(const ActivityLog& log, Timestamp now) {
  return log.stuck_since.has_value() && now - *log.stuck_since >= kFreeHintAfter;
}

ActivityLog consume_free_hint(ActivityLog log) {
  log.stuck_since.reset();
  log.wrong_streak = 0;
  return log;
}

std::int64_t hint_cost(Phase phase) {
  switch (phase) {
    case Phase::kRecognition: return kRecognitionHintCost;
    case Phase::kRecall: return kRecallHintCost;
    case Phase::kEnded: break;
  }
  throw Error(ErrorCode::kInvalidPhase, "no hints in an ended session");
}

void ProgressionPolicy::validate() const {
  if (skill_window < 1) {
    throw Error(ErrorCode::kInvalidPolicy, "skill_window must be >= 1");
  }
  if (!(skill_threshold > 0.0 && skill_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidPolicy, "skill_threshold must be in (0, 1]");
  }
  if (elapsed_days_fallback < 1) {
    throw Error(ErrorCode::kInvalidPolicy, "elapsed_days_fallback must be >= 1");
  }
}

std::string_view to_string(Progression progression) noexcept {
  return progression == Progression::kAdvanceRecall ? "advance_recall"
                                                    : "stay_recognition";
}

Progression progression_decision(std::span<const DatedVerdict> history,
                                 const ProgressionPolicy& policy,
                                 Timestamp now) {
  policy.validate();
  if (history.empty()) return Progression::kStayRecognition;
  const auto first = std::min_element(
      history.begin(), history.end(),
      [](const auto& a, const auto& b) { return a.date < b.date; });
  if (days_between(first->date, date_of(now)) >=
      static_cast<long>(policy.elapsed_days_fallback)) {
    return Progression::kAdvanceRecall;
  }
  const std::size_t window = policy.skill_window;
  if (history.size() < window) return Progression::kStayRecognition;
  // Integer form of correct / window >= threshold, with a small epsilon so a
  // threshold such as 0.8 is not defeated by its binary representation.
  const double needed = policy.skill_threshold * static_cast<double>(window) - 1e-9;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (history[i].correct) ++correct;
    if (i >= window && history[i - window].correct) --correct;
    if (i + 1 >= window && static_cast<double>(correct) >= needed) {
      return Progression::kAdvanceRecall;
    }
  }
  return Progression::kStayRecognition;
}

std::string_view to_string(StatsRange range) noexcept {
  switch (range) {
    case StatsRange::kDay: return "day";
    case StatsRange::kWeek: return "week";
    case StatsRange::kMonth: return "month";
  }
  return "day";
}

std::optional<StatsRange> stats_range_from(std::string_view text) noexcept {
  if (text == "day") return StatsRange::kDay;
  if (text == "week") return StatsRange::kWeek;
  if (text == "month") return StatsRange::kMonth;
  return std::nullopt;
}

std::size_t bucket_count(StatsRange range) noexcept {
  switch (range) {
    case StatsRange::kDay: return 1;
    case StatsRange::kWeek: return 7;
    case StatsRange::kMonth: return 30;
  }
  return 1;
}

StatsReport stats(std::span<const GameEvent> events, StatsRange range,
                  Timestamp now, std::uint32_t stage_target) {
  StatsReport report;
  report.range = range;
  const Date today = date_of(now);
  const std::size_t n = bucket_count(range);
  const Date first_day = today - std::chrono::days{static_cast<long>(n) - 1};
  report.buckets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.buckets[i].day = first_day + std::chrono::days{static_cast<long>(i)};
  }

  // Stage progress within the latest session.
  std::uint32_t recognition_correct = 0;
  std::uint32_t recall_correct = 0;

  for (const auto& event : events) {
    if (event.as<SessionStarted>() != nullptr) {
      recognition_correct = 0;
      recall_correct = 0;
      continue;
    }
    const auto* answered = event.as<ChallengeAnswered>();
    if (answered == nullptr || !answered->correct ||
        !is_avatar_kind(answered->kind)) {
      continue;
    }
    if (answered->kind == ChallengeKind::kRecognition) {
      ++recognition_correct;
    } else {
      ++recall_correct;
    }
    if (event.at > now) continue;
    const Date day = date_of(event.at);
    if (day < first_day || day > today) continue;
    ++report.buckets[static_cast<std::size_t>(days_between(first_day, day))].correct;
    ++report.total;
  }

  const std::uint32_t in_stage =
      recognition_correct < stage_target ? recognition_correct : recall_correct;
  report.remaining_to_next_stage = in_stage >= stage_target ? 0 : stage_target - in_stage;
  return report;
}

SocialMessage social_message(SocialMessageKind kind, std::uint64_t seed,
                             const MessageCatalog& catalog) {
  const auto templates = catalog.templates(kind);
  if (templates.empty()) {
    throw Error(ErrorCode::kNoTemplates,
                "no message templates for " + std::string(to_string(kind)));
  }
  SocialMessage message;
  message.kind = kind;
  message.text = render(pick(templates, seed), emoticon_for(kind));
  message.celebrate = kind == SocialMessageKind::kMilestoneApplause;
  return message;
}

std::optional<SocialMessageKind> message_kind_for(const GameEvent& event) {
  if (const auto* answered = event.as<ChallengeAnswered>()) {
    if (!answered->correct) return SocialMessageKind::kWrongAnswerEncouragement;
    return std::nullopt;
  }
  if (event.as<BadgeAwarded>() != nullptr || event.as<MilestoneReached>() != nullptr) {
    return SocialMessageKind::kMilestoneApplause;
  }
  return std::nullopt;
}

bool is_return_visit(const ActivityLog& log, Timestamp now) {
  return log.last_played_at && date_of(*log.last_played_at) < date_of(now);
}

}  // namespace avatar_game
