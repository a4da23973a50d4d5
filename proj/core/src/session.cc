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

#include "avatar_game/session.h"

#include <algorithm>
#include <cstdio>

#include "avatar_game/error.h"
#include "avatar_game/persuasion.h"
#include "avatar_game/rng.h"

namespace avatar_game {
namespace {

void append_event(SessionState& state, std::vector<GameEvent>* sink, Timestamp at,
                  EventPayload payload) {
  GameEvent event{state.last_seq() + 1, at, std::move(payload)};
  if (sink != nullptr) sink->push_back(event);
  state.event_log.push_back(std::move(event));
}

std::vector<std::string>& avatar_queue(SessionState& state) {
  return state.phase == Phase::kRecognition ? state.recognition_queue
                                            : state.recall_queue;
}

bool avatar_remaining(const SessionState& state) {
  if (state.phase == Phase::kRecognition) return !state.recognition_queue.empty();
  if (state.phase == Phase::kRecall) return !state.recall_queue.empty();
  return false;
}

void present_next(SessionState& state, const ContentPack& content,
                  const AvatarProfile& profile, ChallengeKind kind,
                  Timestamp at, std::vector<GameEvent>* sink) {
  PendingChallenge pending;
  pending.kind = kind;
  if (kind == ChallengeKind::kStandard) {
    pending.challenge_id = state.standard_pool.front();
  } else {
    pending.challenge_id = avatar_queue(state).front();
  }
  pending.presented_seq = state.last_seq() + 1;
  const std::uint64_t presentation_seed =
      derive_seed(state.rng_seed, pending.presented_seq);
  pending.view = present(content.challenge(pending.challenge_id), &profile,
                         content.schema(), presentation_seed);
  append_event(state, sink, at,
               ChallengePresented{pending.challenge_id, kind, presentation_seed});
  state.pending = std::move(pending);
}

const PendingChallenge& require_pending(const SessionState& state) {
  if (state.phase == Phase::kEnded) {
    throw Error(ErrorCode::kSessionEnded,
                "session '" + state.session_id + "' has ended");
  }
  if (!state.pending) {
    throw Error(ErrorCode::kNoPendingChallenge,
                "session '" + state.session_id + "' has no pending challenge");
  }
  return *state.pending;
}

std::vector<std::string> pick_avatar(const ContentPack& content, ChallengeKind kind,
                                     std::size_t count, std::uint64_t seed) {
  const auto specs = content.avatar_challenges_of(kind);
  Rng rng(seed);
  std::vector<std::string> ids;
  for (std::size_t idx : rng.sample_indices(specs.size(), count)) {
    ids.push_back(specs[idx]->challenge_id);
  }
  return ids;
}

}  // namespace

std::int64_t reward_for(ChallengeKind kind) noexcept {
  switch (kind) {
    case ChallengeKind::kStandard: return kStandardReward;
    case ChallengeKind::kRecognition: return kRecognitionReward;
    case ChallengeKind::kRecall: return kRecallReward;
  }
  return 0;
}

std::int64_t penalty_for(ChallengeKind kind) noexcept { return reward_for(kind) / 2; }

SessionState start_session(std::string_view player_id, const ContentPack& content,
                           const AvatarProfile& profile, std::uint64_t seed,
                           Timestamp now, const SessionOptions& options) {
  if (options.daily_quota < 2) {
    throw Error(ErrorCode::kInvalidArgument, "daily_quota must be >= 2");
  }
  const auto recognition = content.avatar_challenges_of(ChallengeKind::kRecognition);
  const auto recall = content.avatar_challenges_of(ChallengeKind::kRecall);
  if (content.standard_challenges().size() < kStandardPerSession ||
      recognition.size() < kRecognitionPerSession ||
      recall.size() < kRecallPerSession) {
    throw Error(ErrorCode::kInsufficientContent,
                "a session needs 7 standard, 3 recognition and 3 recall challenges");
  }

  SessionState state;
  state.player_id = std::string(player_id);
  if (options.session_id.empty()) {
    char suffix[24];
    std::snprintf(suffix, sizeof suffix, "-%016llx",
                  static_cast<unsigned long long>(seed));
    state.session_id = state.player_id + suffix;
  } else {
    state.session_id = options.session_id;
  }
  state.pack_id = content.pack_id();
  state.phase = Phase::kRecognition;
  state.rng_seed = seed;
  state.daily_quota = options.daily_quota;
  state.avatar_solved_today = options.avatar_solved_today;
  state.badges_today = options.badges_today;

  // Every player gets the same seven standard challenges, in a seeded order.
  for (std::size_t i = 0; i < kStandardPerSession; ++i) {
    state.standard_pool.push_back(content.standard_challenges()[i].challenge_id);
  }
  Rng(derive_seed(seed, "standard")).shuffle(state.standard_pool);
  state.recognition_queue = pick_avatar(content, ChallengeKind::kRecognition,
                                        kRecognitionPerSession,
                                        derive_seed(seed, "recognition"));
  state.recall_queue = pick_avatar(content, ChallengeKind::kRecall, kRecallPerSession,
                                   derive_seed(seed, "recall"));

  append_event(state, nullptr, now,
               SessionStarted{state.session_id, state.player_id, state.pack_id, seed,
                              state.daily_quota, state.avatar_solved_today,
                              state.badges_today});
  present_next(state, content, profile, ChallengeKind::kStandard, now, nullptr);
  return state;
}

std::vector<Badge> award_badges(std::uint32_t avatar_solved_today,
                                std::uint32_t daily_quota,
                                std::span<const BadgeKind> already, Timestamp now) {
  if (daily_quota < 2) {
    throw Error(ErrorCode::kInvalidArgument, "daily_quota must be >= 2");
  }
  const std::uint32_t half = (daily_quota + 1) / 2;
  const std::array<std::pair<BadgeKind, std::uint32_t>, 3> thresholds = {{
      {BadgeKind::kSmiley, 1},
      {BadgeKind::kCake, half},
      {BadgeKind::kTrophy, daily_quota},
  }};
  std::vector<Badge> earned;
  for (const auto& [kind, threshold] : thresholds) {
    if (avatar_solved_today >= threshold &&
        std::find(already.begin(), already.end(), kind) == already.end()) {
      earned.push_back(Badge{kind, now, avatar_solved_today});
    }
  }
  return earned;
}

SubmitResult submit(const SessionState& state, const ContentPack& content,
                    const AvatarProfile& profile, std::string_view submission,
                    Timestamp now) {
  const PendingChallenge& pending = require_pending(state);
  const Challenge challenge = content.challenge(pending.challenge_id);
  const Verdict verdict = check_answer(challenge, &profile, submission, &pending.view);

  SubmitResult result{state, verdict, {}};
  SessionState& next = result.state;
  const ChallengeKind kind = pending.kind;

  const std::int64_t points = verdict.correct
                                  ? reward_for(kind)
                                  : -std::min(next.score, penalty_for(kind));
  next.score += points;
  append_event(next, &result.events, now,
               ChallengeAnswered{pending.challenge_id, kind, std::string(submission),
                                 verdict.correct, points, next.score});

  if (kind == ChallengeKind::kStandard) {
    // Removed whatever the verdict.
    next.standard_pool.erase(next.standard_pool.begin());
  } else if (verdict.correct) {
    auto& queue = avatar_queue(next);
    queue.erase(queue.begin());
    ++next.avatar_solved_today;
    for (const Badge& badge :
         award_badges(next.avatar_solved_today, next.daily_quota, next.badges_today,
                      now)) {
      next.badges.push_back(badge);
      next.badges_today.push_back(badge.kind);
      append_event(next, &result.events, now,
                   BadgeAwarded{badge.kind, badge.avatar_solved_count_at_award});
    }
    if (kind == ChallengeKind::kRecognition) {
      if (++next.recognition_done == kRecognitionPerSession) {
        next.phase = Phase::kRecall;
        append_event(next, &result.events, now,
                     MilestoneReached{Milestone::kRecognitionComplete});
      }
    } else if (++next.recall_done == kRecallPerSession) {
      append_event(next, &result.events, now,
                   MilestoneReached{Milestone::kRecallComplete});
    }
  }
  // A failed avatar challenge stays at the front of its queue and comes back
  // after the next standard challenge.

  next.pending.reset();
  const bool avatars_left = next.recall_done < kRecallPerSession;
  if (!avatars_left && next.standard_pool.empty()) {
    next.phase = Phase::kEnded;
    append_event(next, &result.events, now, SessionFinished{next.score});
    return result;
  }

  // Alternate standard and avatar challenges while both remain; once either
  // side runs dry the other is presented back to back.
  const ChallengeKind avatar_kind = next.phase == Phase::kRecognition
                                        ? ChallengeKind::kRecognition
                                        : ChallengeKind::kRecall;
  const bool prefer_avatar = kind == ChallengeKind::kStandard;
  ChallengeKind upcoming = ChallengeKind::kStandard;
  if (next.standard_pool.empty() || (prefer_avatar && avatar_remaining(next))) {
    upcoming = avatar_kind;
  }
  present_next(next, content, profile, upcoming, now, &result.events);
  return result;
}

HintResult buy_hint(const SessionState& state, const ContentPack& content,
                    const AvatarProfile& profile, HintKind kind, Timestamp now) {
  const PendingChallenge& pending = require_pending(state);
  const std::int64_t cost = hint_cost(state.phase);
  const std::string answer =
      expected_answer(content.challenge(pending.challenge_id), &profile);
  if (!hint_applicable(pending.view, answer, kind)) {
    throw Error(ErrorCode::kHintInapplicable,
                std::string(to_string(kind)) + " is not applicable to challenge '" +
                    pending.challenge_id + "'");
  }
  if (state.score < cost) {
    throw Error(ErrorCode::kInsufficientPoints,
                "hint costs " + std::to_string(cost) + " points, score is " +
                    std::to_string(state.score));
  }
  HintResult result{state, {}, {}};
  SessionState& next = result.state;
  next.score -= cost;
  next.pending->view = apply_hint(pending.view, answer, kind);
  append_event(next, nullptr, now,
               HintPurchased{pending.challenge_id, kind, cost, next.score});
  result.view = next.pending->view;
  result.event = next.event_log.back();
  return result;
}

HintResult grant_free_hint(const SessionState& state, const ContentPack& content,
                           const AvatarProfile& profile, HintKind kind,
                           Timestamp now) {
  const PendingChallenge& pending = require_pending(state);
  const std::string answer =
      expected_answer(content.challenge(pending.challenge_id), &profile);
  HintResult result{state, {}, {}};
  SessionState& next = result.state;
  next.pending->view = apply_hint(pending.view, answer, kind);
  append_event(next, nullptr, now, FreeHintGranted{pending.challenge_id, kind});
  result.view = next.pending->view;
  result.event = next.event_log.back();
  return result;
}

SessionState replay_session(std::span<const GameEvent> events,
                            const ContentPack& content,
                            const AvatarProfile& profile) {
  if (events.empty() || events.front().as<SessionStarted>() == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "event log must begin with a session_start event");
  }
  const auto& started = *events.front().as<SessionStarted>();
  SessionOptions options;
  options.session_id = started.session_id;
  options.daily_quota = started.daily_quota;
  options.avatar_solved_today = started.avatar_solved_before;
  options.badges_today = started.badges_before;
  SessionState state = start_session(started.player_id, content, profile,
                                     started.seed, events.front().at, options);

  auto check_prefix = [&](std::size_t from) {
    const auto& log = state.event_log;
    if (log.size() > events.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "replay produced events beyond the recorded log");
    }
    for (std::size_t i = from; i < log.size(); ++i) {
      if (!(log[i] == events[i])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "replay diverged at seq " + std::to_string(events[i].seq));
      }
    }
  };
  check_prefix(0);

  while (state.event_log.size() < events.size()) {
    const std::size_t from = state.event_log.size();
    const GameEvent& command = events[from];
    if (const auto* answered = command.as<ChallengeAnswered>()) {
      state = submit(state, content, profile, answered->submission, command.at).state;
    } else if (const auto* hint = command.as<HintPurchased>()) {
      state = buy_hint(state, content, profile, hint->hint, command.at).state;
    } else if (const auto* free = command.as<FreeHintGranted>()) {
      state = grant_free_hint(state, content, profile, free->hint, command.at).state;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unexpected " + std::string(to_string(command.kind())) +
                      " event at seq " + std::to_string(command.seq));
    }
    check_prefix(from);
  }
  return state;
}

std::int64_t ledger_score(std::span<const GameEvent> events) {
  std::int64_t score = 0;
  for (const auto& event : events) {
    if (const auto* answered = event.as<ChallengeAnswered>()) {
      score += answered->points;
    } else if (const auto* hint = event.as<HintPurchased>()) {
      score -= hint->cost;
    }
  }
  return score;
}

}  // namespace avatar_game
