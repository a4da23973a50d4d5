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

#include "avatar_game/auth.h"

#include <algorithm>
#include <cstdio>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"

namespace avatar_game {

std::string_view to_string(ResetOutcome outcome) noexcept {
  switch (outcome) {
    case ResetOutcome::kPending: return "pending";
    case ResetOutcome::kGranted: return "granted";
    case ResetOutcome::kDenied: return "denied";
    case ResetOutcome::kLocked: return "locked";
  }
  return "pending";
}

std::optional<ResetOutcome> reset_outcome_from(std::string_view text) noexcept {
  for (auto outcome : {ResetOutcome::kPending, ResetOutcome::kGranted,
                       ResetOutcome::kDenied, ResetOutcome::kLocked}) {
    if (to_string(outcome) == text) return outcome;
  }
  return std::nullopt;
}

void VerifyPolicy::validate(std::size_t schema_size) const {
  if (m < 1 || m > k || k > schema_size) {
    throw Error(ErrorCode::kInvalidPolicy,
                "verify policy needs 1 <= m <= k <= " + std::to_string(schema_size));
  }
  if (max_attempts < 1) {
    throw Error(ErrorCode::kInvalidPolicy, "max_attempts must be >= 1");
  }
  if (lockout.count() < 0) {
    throw Error(ErrorCode::kInvalidPolicy, "lockout must not be negative");
  }
}

const ResetAttempt* AuthLedger::find(std::string_view attempt_id) const {
  for (const auto& attempt : attempts) {
    if (attempt.attempt_id == attempt_id) return &attempt;
  }
  return nullptr;
}

bool locked_out(const AuthLedger& ledger, Timestamp now) {
  return ledger.locked_until.has_value() && now < *ledger.locked_until;
}

std::size_t recent_denials(const AuthLedger& ledger, Timestamp now) {
  return static_cast<std::size_t>(std::count_if(
      ledger.attempts.begin(), ledger.attempts.end(), [&](const ResetAttempt& a) {
        return (a.outcome == ResetOutcome::kDenied ||
                a.outcome == ResetOutcome::kLocked) &&
               a.resolved_at && *a.resolved_at <= now &&
               now - *a.resolved_at < kAttemptWindow;
      }));
}

std::size_t count_correct(const ResetAttempt& attempt, const AvatarProfile& profile) {
  std::size_t correct = 0;
  for (const auto& attribute_id : attempt.questions) {
    auto it = attempt.submitted.find(attribute_id);
    if (it == attempt.submitted.end()) continue;
    try {
      if (normalize_answer(it->second) ==
          normalize_answer(profile.value_of(attribute_id))) {
        ++correct;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyAnswer) throw;
    }
  }
  return correct;
}

ResetOutcome judge(const ResetAttempt& attempt, const AvatarProfile& profile,
                   const VerifyPolicy& policy) {
  return count_correct(attempt, profile) >= policy.m ? ResetOutcome::kGranted
                                                     : ResetOutcome::kDenied;
}

ResetAttempt begin_reset(AuthLedger& ledger, const AvatarProfile* profile,
                         const VerifyPolicy& policy, std::uint64_t seed,
                         Timestamp now) {
  if (profile == nullptr) {
    throw Error(ErrorCode::kNotEnrolled,
                "player '" + ledger.player_id + "' has no avatar profile");
  }
  policy.validate(profile->assignments.size());
  if (locked_out(ledger, now)) {
    throw Error(ErrorCode::kLockedOut, "too many failed reset attempts");
  }
  std::vector<std::string> attributes;
  for (const auto& [attribute_id, value] : profile->assignments) {
    attributes.push_back(attribute_id);
  }
  ResetAttempt attempt;
  char suffix[24];
  std::snprintf(suffix, sizeof suffix, "-reset-%zu", ledger.attempts.size() + 1);
  attempt.attempt_id = ledger.player_id + suffix;
  attempt.player_id = ledger.player_id;
  attempt.at = now;
  Rng rng(derive_seed(seed, ledger.player_id));
  for (std::size_t idx : rng.sample_indices(attributes.size(), policy.k)) {
    attempt.questions.push_back(attributes[idx]);
  }
  ledger.attempts.push_back(attempt);
  return attempt;
}

ResetOutcome verify(AuthLedger& ledger, std::string_view attempt_id,
                    const std::map<std::string, std::string>& answers,
                    const AvatarProfile& profile, const VerifyPolicy& policy,
                    Timestamp now) {
  auto it = std::find_if(ledger.attempts.begin(), ledger.attempts.end(),
                         [&](const auto& a) { return a.attempt_id == attempt_id; });
  if (it == ledger.attempts.end()) {
    throw Error(ErrorCode::kUnknownAttempt,
                "no reset attempt '" + std::string(attempt_id) + "'");
  }
  if (it->outcome != ResetOutcome::kPending) {
    throw Error(ErrorCode::kAttemptAlreadyResolved,
                "reset attempt '" + it->attempt_id + "' is already resolved");
  }
  for (const auto& question : it->questions) {
    if (answers.find(question) == answers.end()) {
      throw Error(ErrorCode::kIncompleteSubmission,
                  "every posed question needs an answer");
    }
  }
  if (locked_out(ledger, now)) {
    throw Error(ErrorCode::kLockedOut, "too many failed reset attempts");
  }
  for (const auto& question : it->questions) {
    it->submitted[question] = answers.at(question);
  }
  it->resolved_at = now;
  it->outcome = judge(*it, profile, policy);
  if (it->outcome == ResetOutcome::kDenied &&
      recent_denials(ledger, now) >= policy.max_attempts) {
    it->outcome = ResetOutcome::kLocked;
    ledger.locked_until = now + policy.lockout;
  }
  return it->outcome;
}

}  // namespace avatar_game
