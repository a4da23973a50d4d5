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

#ifndef AVATAR_GAME_SESSION_H_
#define AVATAR_GAME_SESSION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/avatar.h"
#include "avatar_game/challenge.h"
#include "avatar_game/clock.h"
#include "avatar_game/content.h"
#include "avatar_game/game_events.h"

namespace avatar_game {

inline constexpr std::int64_t kStandardReward = 10;
inline constexpr std::int64_t kRecognitionReward = 15;
inline constexpr std::int64_t kRecallReward = 20;
inline constexpr std::uint32_t kDefaultDailyQuota = 6;

std::int64_t reward_for(ChallengeKind kind) noexcept;
// Half the reward, rounded down: 5, 7, 10.
std::int64_t penalty_for(ChallengeKind kind) noexcept;

struct PendingChallenge {
  std::string challenge_id;
  ChallengeKind kind = ChallengeKind::kStandard;
  std::uint64_t presented_seq = 0;
  ChallengeView view;

  bool operator==(const PendingChallenge&) const = default;
};

// One run of the prototype flow: 7 standard challenges alternating with 3
// recognition and then 3 recall avatar challenges.
struct SessionState {
  std::string session_id;
  std::string player_id;
  std::string pack_id;
  Phase phase = Phase::kRecognition;
  // Remaining challenge ids; the front is presented next.
  std::vector<std::string> standard_pool;
  std::vector<std::string> recognition_queue;
  std::vector<std::string> recall_queue;
  std::uint32_t recognition_done = 0;
  std::uint32_t recall_done = 0;
  std::optional<PendingChallenge> pending;
  std::int64_t score = 0;
  std::vector<Badge> badges;
  std::uint32_t daily_quota = kDefaultDailyQuota;
  // Correct avatar answers today, including earlier sessions.
  std::uint32_t avatar_solved_today = 0;
  std::vector<BadgeKind> badges_today;
  std::uint64_t rng_seed = 0;
  std::vector<GameEvent> event_log;

  std::uint64_t last_seq() const {
    return event_log.empty() ? 0 : event_log.back().seq;
  }

  bool operator==(const SessionState&) const = default;
};

struct SessionOptions {
  std::string session_id;  // derived from player and seed when empty
  std::uint32_t daily_quota = kDefaultDailyQuota;
  std::uint32_t avatar_solved_today = 0;
  std::vector<BadgeKind> badges_today;
};

// Throws kInsufficientContent, kInvalidArgument (quota < 2).
SessionState start_session(std::string_view player_id,
                           const ContentPack& content,
                           const AvatarProfile& profile, std::uint64_t seed,
                           Timestamp now, const SessionOptions& options = {});

struct SubmitResult {
  SessionState state;
  Verdict verdict;
  std::vector<GameEvent> events;  // appended by this call
};

// Throws kSessionEnded, kNoPendingChallenge, kEmptyAnswer.
SubmitResult submit(const SessionState& state, const ContentPack& content,
                    const AvatarProfile& profile, std::string_view submission,
                    Timestamp now);

// Badges newly earned at this count: smiley at 1, cake at ceil(quota / 2),
// trophy at quota; each at most once per day. Throws kInvalidArgument for
// quota < 2.
std::vector<Badge> award_badges(std::uint32_t avatar_solved_today,
                                std::uint32_t daily_quota,
                                std::span<const BadgeKind> already,
                                Timestamp now);

struct HintResult {
  SessionState state;
  ChallengeView view;
  GameEvent event;
};

// Charges hint_cost(phase). Throws kInsufficientPoints, kHintInapplicable,
// kSessionEnded, kNoPendingChallenge.
HintResult buy_hint(const SessionState& state, const ContentPack& content,
                    const AvatarProfile& profile, HintKind kind, Timestamp now);

// Applies a hint at no cost (the daily hint for stuck players).
HintResult grant_free_hint(const SessionState& state,
                           const ContentPack& content,
                           const AvatarProfile& profile, HintKind kind,
                           Timestamp now);

// Re-executes the commands recorded in `events` from the session_start event
// and checks that every derived event matches. Throws kInvalidArgument on
// divergence.
SessionState replay_session(std::span<const GameEvent> events,
                            const ContentPack& content,
                            const AvatarProfile& profile);

// Score recomputed from answered/hint events alone.
std::int64_t ledger_score(std::span<const GameEvent> events);

}  // namespace avatar_game

#endif  // AVATAR_GAME_SESSION_H_
