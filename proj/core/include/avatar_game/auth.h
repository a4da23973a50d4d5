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

#ifndef AVATAR_GAME_AUTH_H_
#define AVATAR_GAME_AUTH_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/avatar.h"
#include "avatar_game/clock.h"

namespace avatar_game {

// m-of-k avatar question check for password reset.
struct VerifyPolicy {
  std::size_t k = 3;
  std::size_t m = 3;
  std::size_t max_attempts = 3;
  std::chrono::seconds lockout = std::chrono::hours{24};

  // Throws kInvalidPolicy unless 1 <= m <= k <= schema_size and
  // max_attempts >= 1.
  void validate(std::size_t schema_size) const;

  bool operator==(const VerifyPolicy&) const = default;
};

inline constexpr std::chrono::hours kAttemptWindow{24};

enum class ResetOutcome { kPending, kGranted, kDenied, kLocked };

std::string_view to_string(ResetOutcome outcome) noexcept;
std::optional<ResetOutcome> reset_outcome_from(std::string_view text) noexcept;

struct ResetAttempt {
  std::string attempt_id;
  std::string player_id;
  std::vector<std::string> questions;  // attribute ids, asked in order
  std::map<std::string, std::string> submitted;
  ResetOutcome outcome = ResetOutcome::kPending;
  Timestamp at{};
  std::optional<Timestamp> resolved_at;

  bool operator==(const ResetAttempt&) const = default;
};

// Per-player reset history.
struct AuthLedger {
  std::string player_id;
  std::vector<ResetAttempt> attempts;
  std::optional<Timestamp> locked_until;

  const ResetAttempt* find(std::string_view attempt_id) const;
  bool operator==(const AuthLedger&) const = default;
};

bool locked_out(const AuthLedger& ledger, Timestamp now);

// Denied or locked attempts resolved in (now - 24 h, now].
std::size_t recent_denials(const AuthLedger& ledger, Timestamp now);

// Number of posed questions answered correctly under normalize_answer.
// Unanswered or empty answers count as wrong.
std::size_t count_correct(const ResetAttempt& attempt,
                          const AvatarProfile& profile);

// Granted iff count_correct >= m, else denied. Pure; no lockout bookkeeping.
ResetOutcome judge(const ResetAttempt& attempt, const AvatarProfile& profile,
                   const VerifyPolicy& policy);

// Poses k distinct attributes chosen by seeded sample and records the attempt
// in the ledger. `profile` is null for players without an avatar. Throws
// kNotEnrolled, kLockedOut.
ResetAttempt begin_reset(AuthLedger& ledger, const AvatarProfile* profile,
                         const VerifyPolicy& policy, std::uint64_t seed,
                         Timestamp now);

// Resolves a pending attempt. A denial that reaches max_attempts inside the
// rolling window locks the player for policy.lockout and reports kLocked.
// Only the aggregate outcome is returned. Throws kUnknownAttempt,
// kAttemptAlreadyResolved, kIncompleteSubmission, kLockedOut.
ResetOutcome verify(AuthLedger& ledger, std::string_view attempt_id,
                    const std::map<std::string, std::string>& answers,
                    const AvatarProfile& profile, const VerifyPolicy& policy,
                    Timestamp now);

}  // namespace avatar_game

#endif  // AVATAR_GAME_AUTH_H_
