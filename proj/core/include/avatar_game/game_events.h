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

#ifndef AVATAR_GAME_GAME_EVENTS_H_
#define AVATAR_GAME_GAME_EVENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "avatar_game/challenge.h"
#include "avatar_game/clock.h"

namespace avatar_game {

enum class Phase { kRecognition, kRecall, kEnded };
enum class BadgeKind { kSmiley, kCake, kTrophy };
enum class Milestone { kRecognitionComplete, kRecallComplete };

std::string_view to_string(Phase phase) noexcept;
std::string_view to_string(BadgeKind kind) noexcept;
std::string_view to_string(Milestone milestone) noexcept;
std::optional<Phase> phase_from(std::string_view text) noexcept;
std::optional<BadgeKind> badge_kind_from(std::string_view text) noexcept;
std::optional<Milestone> milestone_from(std::string_view text) noexcept;

struct Badge {
  BadgeKind kind = BadgeKind::kSmiley;
  Timestamp awarded_at{};
  std::uint32_t avatar_solved_count_at_award = 0;

  bool operator==(const Badge&) const = default;
};

// Event payloads. Commands (answers, hints) carry everything needed to
// re-execute them; the rest are derived and re-checked on replay.
struct SessionStarted {
  std::string session_id;
  std::string player_id;
  std::string pack_id;
  std::uint64_t seed = 0;
  std::uint32_t daily_quota = 0;
  std::uint32_t avatar_solved_before = 0;
  std::vector<BadgeKind> badges_before;

  bool operator==(const SessionStarted&) const = default;
};

struct ChallengePresented {
  std::string challenge_id;
  ChallengeKind kind = ChallengeKind::kStandard;
  std::uint64_t presentation_seed = 0;

  bool operator==(const ChallengePresented&) const = default;
};

struct ChallengeAnswered {
  std::string challenge_id;
  ChallengeKind kind = ChallengeKind::kStandard;
  std::string submission;
  bool correct = false;
  std::int64_t points = 0;  // applied delta after clamping
  std::int64_t score_after = 0;

  bool operator==(const ChallengeAnswered&) const = default;
};

struct HintPurchased {
  std::string challenge_id;
  HintKind hint = HintKind::kUnlockCues;
  std::int64_t cost = 0;
  std::int64_t score_after = 0;

  bool operator==(const HintPurchased&) const = default;
};

struct FreeHintGranted {
  std::string challenge_id;
  HintKind hint = HintKind::kUnlockCues;

  bool operator==(const FreeHintGranted&) const = default;
};

struct BadgeAwarded {
  BadgeKind badge = BadgeKind::kSmiley;
  std::uint32_t avatar_solved_count = 0;

  bool operator==(const BadgeAwarded&) const = default;
};

struct MilestoneReached {
  Milestone milestone = Milestone::kRecognitionComplete;

  bool operator==(const MilestoneReached&) const = default;
};

struct SessionFinished {
  std::int64_t final_score = 0;

  bool operator==(const SessionFinished&) const = default;
};

using EventPayload =
    std::variant<SessionStarted, ChallengePresented, ChallengeAnswered,
                 HintPurchased, FreeHintGranted, BadgeAwarded,
                 MilestoneReached, SessionFinished>;

enum class EventKind {
  kSessionStart,
  kPresented,
  kAnswered,
  kHintBought,
  kFreeHint,
  kBadge,
  kMilestone,
  kSessionEnd,
};

std::string_view to_string(EventKind kind) noexcept;

struct GameEvent {
  std::uint64_t seq = 0;
  Timestamp at{};
  EventPayload payload;

  EventKind kind() const noexcept;

  template <typename T>
  const T* as() const noexcept {
    return std::get_if<T>(&payload);
  }

  bool operator==(const GameEvent&) const = default;
};

inline bool is_avatar_kind(ChallengeKind kind) {
  return kind != ChallengeKind::kStandard;
}

}  // namespace avatar_game

#endif  // AVATAR_GAME_GAME_EVENTS_H_
