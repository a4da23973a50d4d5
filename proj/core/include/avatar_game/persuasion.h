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

#ifndef AVATAR_GAME_PERSUASION_H_
#define AVATAR_GAME_PERSUASION_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/clock.h"
#include "avatar_game/game_events.h"

namespace avatar_game {

inline constexpr std::chrono::hours kReminderInterval{24};
inline constexpr std::chrono::hours kDisappointmentAfter{48};
inline constexpr std::chrono::hours kFreeHintAfter{24};
inline constexpr std::uint32_t kStuckAfterWrong = 3;
inline constexpr std::int64_t kRecognitionHintCost = 30;
inline constexpr std::int64_t kRecallHintCost = 50;

// Every threshold below is inclusive: a value exactly at the boundary
// triggers.

struct ActivityLog {
  std::string player_id;
  std::optional<Timestamp> last_played_at;
  std::optional<Timestamp> last_reminded_at;
  // Set when the pending challenge collects kStuckAfterWrong consecutive
  // wrong answers.
  std::optional<Timestamp> stuck_since;
  std::string streak_challenge_id;
  std::uint32_t wrong_streak = 0;
  std::map<Date, std::uint32_t> correct_avatar_by_day;

  bool operator==(const ActivityLog&) const = default;
};

// Folds session events into the activity log (last play, stuck detection,
// per-day correct avatar counts). Events must be in seq order.
ActivityLog record_events(ActivityLog log, std::span<const GameEvent> events);

enum class NotificationKind { kReminder, kAbsenceDisappointment };

std::string_view to_string(NotificationKind kind) noexcept;

struct Notification {
  NotificationKind kind = NotificationKind::kReminder;
  std::string text;
  std::int64_t hours_absent = 0;

  bool operator==(const Notification&) const = default;
};

enum class SocialMessageKind {
  kReturnCongratulation,
  kMilestoneApplause,
  kWrongAnswerEncouragement,
  kAbsenceDisappointment,
};

std::string_view to_string(SocialMessageKind kind) noexcept;
std::optional<SocialMessageKind> social_message_kind_from(
    std::string_view text) noexcept;

inline constexpr std::string_view kEmoticonToken = "{emoticon}";

struct SocialMessage {
  SocialMessageKind kind = SocialMessageKind::kReturnCongratulation;
  std::string text;       // emoticon substituted
  bool celebrate = false;  // play milestone sound and animation

  bool operator==(const SocialMessage&) const = default;
};

// Message templates per kind plus the neutral reminder templates. Every
// template carries kEmoticonToken.
class MessageCatalog {
 public:
  static MessageCatalog defaults();

  // Throws kInvalidArgument when the template lacks the emoticon token.
  void add(SocialMessageKind kind, std::string text);
  void add_reminder(std::string text);

  std::span<const std::string> templates(SocialMessageKind kind) const;
  std::span<const std::string> reminder_templates() const {
    return reminders_;
  }
  // Kinds with no template.
  std::vector<SocialMessageKind> missing_kinds() const;

  bool operator==(const MessageCatalog&) const = default;

 private:
  std::map<SocialMessageKind, std::vector<std::string>> templates_;
  std::vector<std::string> reminders_;
};

std::string_view emoticon_for(SocialMessageKind kind) noexcept;
inline constexpr std::string_view kReminderEmoticon = "\xF0\x9F\x99\x82";  // 🙂

// A reminder iff now - last_played_at >= 24 h and no reminder was sent in the
// last 24 h; the disappointment variant iff the absence is >= 48 h.
std::optional<Notification> next_notification(
    const ActivityLog& log, Timestamp now,
    const MessageCatalog& catalog = MessageCatalog::defaults(),
    std::uint64_t seed = 0);

ActivityLog mark_notified(ActivityLog log, Timestamp now);

bool free_hint_due(const ActivityLog& log, Timestamp now);
ActivityLog consume_free_hint(ActivityLog log);

// 30 in the recognition phase, 50 in the recall phase. Throws kInvalidPhase
// for an ended session.
std::int64_t hint_cost(Phase phase);

struct ProgressionPolicy {
  std::uint32_t skill_window = 6;
  double skill_threshold = 0.8;
  std::uint32_t elapsed_days_fallback = 7;

  // Throws kInvalidPolicy.
  void validate() const;

  bool operator==(const ProgressionPolicy&) const = default;
};

struct DatedVerdict {
  Date date{};
  bool correct = false;

  bool operator==(const DatedVerdict&) const = default;
};

enum class Progression { kStayRecognition, kAdvanceRecall };

std::string_view to_string(Progression progression) noexcept;

// Advances once any run of skill_window consecutive recognition verdicts
// reaches skill_threshold, or once elapsed_days_fallback calendar days have
// passed since the first verdict. History is in chronological order. Both
// conditions are monotone in appended history, so the decision never reverts.
Progression progression_decision(std::span<const DatedVerdict> history,
                                 const ProgressionPolicy& policy,
                                 Timestamp now);

enum class StatsRange { kDay, kWeek, kMonth };

std::string_view to_string(StatsRange range) noexcept;
std::optional<StatsRange> stats_range_from(std::string_view text) noexcept;
std::size_t bucket_count(StatsRange range) noexcept;

struct StatsBucket {
  Date day{};
  std::uint32_t correct = 0;

  bool operator==(const StatsBucket&) const = default;
};

struct StatsReport {
  StatsRange range = StatsRange::kDay;
  std::vector<StatsBucket> buckets;  // oldest first, one per calendar day
  std::uint32_t total = 0;
  std::uint32_t remaining_to_next_stage = 0;

  bool operator==(const StatsReport&) const = default;
};

// Correct avatar answers per calendar day over the range ending on now's day
// (1, 7 or 30 days). The current stage is the phase of the latest session in
// the events; remaining = max(0, stage_target - correct answers of that
// stage's kind).
StatsReport stats(std::span<const GameEvent> events, StatsRange range,
                  Timestamp now, std::uint32_t stage_target = 3);

// Seeded pick among the kind's templates. Throws kNoTemplates.
SocialMessage social_message(
    SocialMessageKind kind, std::uint64_t seed,
    const MessageCatalog& catalog = MessageCatalog::defaults());

// Which message, if any, reacts to this event: wrong answers get
// encouragement, badges and milestones get applause.
std::optional<SocialMessageKind> message_kind_for(const GameEvent& event);

// True when the previous play happened on an earlier calendar day.
bool is_return_visit(const ActivityLog& log, Timestamp now);

}  // namespace avatar_game

#endif  // AVATAR_GAME_PERSUASION_H_
