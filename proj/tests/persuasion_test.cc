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

#include <gtest/gtest.h>

#include "avatar_game/error.h"
#include "avatar_game/persuasion.h"
#include "test_support.h"

namespace avatar_game {
namespace {

using agtest::at;
using std::chrono::hours;
using std::chrono::minutes;

ActivityLog played_at(Timestamp t) {
  ActivityLog log;
  log.player_id = "p";
  log.last_played_at = t;
  return log;
}

GameEvent answered(std::uint64_t seq, Timestamp t, ChallengeKind kind, bool correct,
                   std::string id = "av-rec-colour") {
  return {seq, t, ChallengeAnswered{std::move(id), kind, "x", correct, 0, 0}};
}

GameEvent started(std::uint64_t seq, Timestamp t) {
  return {seq, t, SessionStarted{"s", "p", "sample-pack", 1, 6, 0, {}}};
}

bool has_emoticon(const std::string& text) {
  // Every emoticon used is outside ASCII; the token itself must be gone.
  return text.find(kEmoticonToken) == std::string::npos &&
         std::any_of(text.begin(), text.end(),
                     [](char c) { return static_cast<unsigned char>(c) >= 0x80; });
}

TEST(Reminder, FiresAtExactlyTwentyFourHours) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  const ActivityLog log = played_at(t0);
  EXPECT_FALSE(next_notification(log, t0 + hours{23} + minutes{59}).has_value());
  EXPECT_FALSE(next_notification(log, t0 + hours{24} - std::chrono::seconds{1}));
  const auto note = next_notification(log, t0 + hours{24});
  ASSERT_TRUE(note.has_value());
  EXPECT_EQ(note->kind, NotificationKind::kReminder);
  EXPECT_TRUE(has_emoticon(note->text));
  EXPECT_EQ(note->hours_absent, 24);
}

TEST(Reminder, DisappointmentFromFortyEightHours) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  const ActivityLog log = played_at(t0);
  EXPECT_EQ(next_notification(log, t0 + hours{48} - std::chrono::seconds{1})->kind,
            NotificationKind::kReminder);
  EXPECT_EQ(next_notification(log, t0 + hours{48})->kind,
            NotificationKind::kAbsenceDisappointment);
  const auto late = next_notification(log, t0 + hours{49});
  EXPECT_EQ(late->kind, NotificationKind::kAbsenceDisappointment);
  EXPECT_TRUE(has_emoticon(late->text));
}

TEST(Reminder, NeverPlayedMeansNoReminder) {
  EXPECT_FALSE(next_notification(ActivityLog{}, at("2026-03-02T10:00:00Z")));
}

TEST(Reminder, AtMostOnePerTwentyFourHours) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  ActivityLog log = played_at(t0);
  const Timestamp first = t0 + hours{30};
  ASSERT_TRUE(next_notification(log, first));
  log = mark_notified(log, first);
  EXPECT_FALSE(next_notification(log, first + hours{1}));
  EXPECT_FALSE(next_notification(log, first + hours{23} + minutes{59}));
  EXPECT_TRUE(next_notification(log, first + hours{24}));
  // Sweep: over a week of hourly polls, reminders are at least 24 h apart.
  ActivityLog sweep = played_at(t0);
  std::optional<Timestamp> last;
  for (int h = 0; h < 24 * 7; ++h) {
    const Timestamp now = t0 + hours{h};
    if (next_notification(sweep, now)) {
      if (last) {
        EXPECT_GE(now - *last, hours{24});
      }
      last = now;
      sweep = mark_notified(sweep, now);
    }
  }
}

TEST(Reminder, PlayingAgainRestartsTheClock) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  ActivityLog log = mark_notified(played_at(t0), t0 + hours{25});
  log.last_played_at = t0 + hours{26};
  EXPECT_FALSE(next_notification(log, t0 + hours{49}));
  EXPECT_TRUE(next_notification(log, t0 + hours{50}));
}

TEST(FreeHint, InclusiveTwentyFourHourBoundary) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  ActivityLog log;
  EXPECT_FALSE(free_hint_due(log, t0));
  log.stuck_since = t0;
  EXPECT_FALSE(free_hint_due(log, t0 + hours{23} + minutes{59}));
  EXPECT_TRUE(free_hint_due(log, t0 + hours{24}));
  EXPECT_TRUE(free_hint_due(log, t0 + hours{25}));
  EXPECT_FALSE(free_hint_due(consume_free_hint(log), t0 + hours{25}));
}

TEST(StuckDetection, ThreeWrongOnTheSameChallenge) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  std::vector<GameEvent> events = {
      answered(1, t0, ChallengeKind::kRecall, false, "a"),
      answered(2, t0 + minutes{1}, ChallengeKind::kStandard, false, "s1"),
      answered(3, t0 + minutes{2}, ChallengeKind::kRecall, false, "a"),
  };
  ActivityLog log = record_events(ActivityLog{}, events);
  EXPECT_FALSE(log.stuck_since.has_value());
  const GameEvent third = answered(4, t0 + minutes{3}, ChallengeKind::kRecall, false, "a");
  log = record_events(log, std::span(&third, 1));
  ASSERT_TRUE(log.stuck_since.has_value());
  EXPECT_EQ(*log.stuck_since, t0 + minutes{3});
  EXPECT_EQ(*log.last_played_at, t0 + minutes{3});

  const GameEvent solved = answered(5, t0 + minutes{4}, ChallengeKind::kRecall, true, "a");
  log = record_events(log, std::span(&solved, 1));
  EXPECT_FALSE(log.stuck_since.has_value());
  EXPECT_EQ(log.correct_avatar_by_day.at(date_of(t0)), 1u);
}

TEST(StuckDetection, SwitchingChallengesResetsTheStreak) {
  const Timestamp t0 = at("2026-03-02T10:00:00Z");
  std::vector<GameEvent> events = {
      answered(1, t0, ChallengeKind::kRecall, false, "a"),
      answered(2, t0, ChallengeKind::kRecall, false, "a"),
      answered(3, t0, ChallengeKind::kRecall, false, "b"),
      answered(4, t0, ChallengeKind::kRecall, false, "b"),
  };
  EXPECT_FALSE(record_events(ActivityLog{}, events).stuck_since.has_value());
}

TEST(HintCost, ByPhase) {
  EXPECT_EQ(hint_cost(Phase::kRecognition), 30);
  EXPECT_EQ(hint_cost(Phase::kRecall), 50);
  EXPECT_GT(hint_cost(Phase::kRecall), hint_cost(Phase::kRecognition));
  try {
    hint_cost(Phase::kEnded);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPhase);
  }
}

std::vector<DatedVerdict> verdicts(Date day, std::initializer_list<int> bits) {
  std::vector<DatedVerdict> out;
  for (int b : bits) out.push_back({day, b != 0});
  return out;
}

TEST(Progression, Examples) {
  const ProgressionPolicy policy;
  const Timestamp day1 = at("2026-03-01T12:00:00Z");
  const Date d1 = date_of(day1);
  const Timestamp day2 = day1 + hours{24};
  const Timestamp day8 = day1 + hours{24 * 7};
  EXPECT_EQ(progression_decision(verdicts(d1, {1, 1, 1, 1, 1, 1}), policy, day2),
            Progression::kAdvanceRecall);
  EXPECT_EQ(progression_decision(verdicts(d1, {1, 0, 1, 0, 1, 0}), policy, day2),
            Progression::kStayRecognition);
  EXPECT_EQ(progression_decision(verdicts(d1, {1, 0, 1, 0, 1, 0}), policy, day8),
            Progression::kAdvanceRecall);
  // 5 of 6 is 0.83, enough for 0.8; 4 of 6 is not.
  EXPECT_EQ(progression_decision(verdicts(d1, {1, 1, 0, 1, 1, 1}), policy, day2),
            Progression::kAdvanceRecall);
  EXPECT_EQ(progression_decision(verdicts(d1, {1, 1, 0, 1, 0, 1}), policy, day2),
            Progression::kStayRecognition);
  EXPECT_EQ(progression_decision({}, policy, day8), Progression::kStayRecognition);
}

TEST(Progression, PolicyValidation) {
  EXPECT_THROW((ProgressionPolicy{0, 0.8, 7}.validate()), Error);
  EXPECT_THROW((ProgressionPolicy{6, 0.0, 7}.validate()), Error);
  EXPECT_THROW((ProgressionPolicy{6, 1.5, 7}.validate()), Error);
  EXPECT_THROW((ProgressionPolicy{6, 0.8, 0}.validate()), Error);
  EXPECT_NO_THROW((ProgressionPolicy{1, 1.0, 1}.validate()));
}

// Once advanced, appending more history never moves the player back.
TEST(Progression, Ratchet) {
  Rng rng(77);
  const Timestamp start = at("2026-03-01T12:00:00Z");
  for (int trial = 0; trial < 300; ++trial) {
    const ProgressionPolicy policy{static_cast<std::uint32_t>(1 + rng.below(8)),
                                   0.5 + 0.5 * rng.unit(),
                                   static_cast<std::uint32_t>(1 + rng.below(10))};
    const double p = rng.unit();
    std::vector<DatedVerdict> history;
    bool advanced = false;
    for (int step = 0; step < 40; ++step) {
      const Timestamp now = start + hours{6 * step};
      history.push_back({date_of(now), rng.bernoulli(p)});
      const bool now_advanced =
          progression_decision(history, policy, now) == Progression::kAdvanceRecall;
      if (advanced) {
        EXPECT_TRUE(now_advanced) << "trial " << trial << " step " << step;
      }
      advanced = advanced || now_advanced;
    }
  }
}

TEST(Stats, EmptyEventsGiveZeroes) {
  for (StatsRange range : {StatsRange::kDay, StatsRange::kWeek, StatsRange::kMonth}) {
    const StatsReport r = stats({}, range, at("2026-03-10T12:00:00Z"));
    EXPECT_EQ(r.buckets.size(), bucket_count(range));
    EXPECT_EQ(r.total, 0u);
    for (const auto& b : r.buckets) EXPECT_EQ(b.correct, 0u);
  }
}

TEST(Stats, SixCorrectToday) {
  const Timestamp t = at("2026-03-10T09:00:00Z");
  std::vector<GameEvent> events{started(1, t)};
  for (int i = 0; i < 6; ++i) {
    events.push_back(answered(events.size() + 1, t + minutes{i},
                              i < 3 ? ChallengeKind::kRecognition : ChallengeKind::kRecall,
                              true));
  }
  const StatsReport r = stats(events, StatsRange::kDay, t + hours{1});
  ASSERT_EQ(r.buckets.size(), 1u);
  EXPECT_EQ(r.buckets[0].correct, 6u);
  EXPECT_EQ(r.total, 6u);
  EXPECT_EQ(r.remaining_to_next_stage, 0u);
}

TEST(Stats, RemainingCountsTheCurrentStage) {
  const Timestamp t = at("2026-03-10T09:00:00Z");
  std::vector<GameEvent> events{started(1, t),
                                answered(2, t, ChallengeKind::kRecognition, true)};
  EXPECT_EQ(stats(events, StatsRange::kDay, t).remaining_to_next_stage, 2u);
  events.push_back(answered(3, t, ChallengeKind::kRecognition, true));
  events.push_back(answered(4, t, ChallengeKind::kRecognition, true));
  events.push_back(answered(5, t, ChallengeKind::kRecall, true));
  EXPECT_EQ(stats(events, StatsRange::kDay, t).remaining_to_next_stage, 2u);
}

// Conservation against an independent per-day scan.
TEST(Stats, BucketsMatchALinearScan) {
  Rng rng(5);
  const Timestamp now = at("2026-03-31T18:00:00Z");
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GameEvent> events;
    Timestamp t = now - hours{24 * 40};
    for (int i = 0; i < 200; ++i) {
      t += minutes{static_cast<int>(rng.below(600))};
      if (t > now) break;
      const auto kind = static_cast<ChallengeKind>(rng.below(3));
      events.push_back(answered(events.size() + 1, t, kind, rng.bernoulli(0.6)));
    }
    for (StatsRange range : {StatsRange::kDay, StatsRange::kWeek, StatsRange::kMonth}) {
      const StatsReport r = stats(events, range, now);
      const long n = static_cast<long>(bucket_count(range));
      std::map<Date, std::uint32_t> oracle;
      std::uint32_t total = 0;
      for (const auto& e : events) {
        const auto* a = e.as<ChallengeAnswered>();
        const long age = days_between(date_of(e.at), date_of(now));
        if (a->correct && a->kind != ChallengeKind::kStandard && age >= 0 && age < n) {
          ++oracle[date_of(e.at)];
          ++total;
        }
      }
      std::uint32_t sum = 0;
      for (const auto& b : r.buckets) {
        EXPECT_EQ(b.correct, oracle[b.day]);
        sum += b.correct;
      }
      EXPECT_EQ(sum, total);
      EXPECT_EQ(r.total, total);
      EXPECT_EQ(r.buckets.size(), static_cast<std::size_t>(n));
      EXPECT_EQ(r.buckets.back().day, date_of(now));
    }
  }
}

TEST(Stats, TenCorrectOverThreeDays) {
  const Timestamp t = at("2026-03-10T09:00:00Z");
  std::vector<GameEvent> events;
  const int per_day[] = {3, 5, 2};
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < per_day[d]; ++i) {
      events.push_back(answered(events.size() + 1, t + hours{24 * d} + minutes{i},
                                ChallengeKind::kRecall, true));
    }
  }
  const StatsReport r = stats(events, StatsRange::kWeek, t + hours{48} + hours{1});
  EXPECT_EQ(r.total, 10u);
  EXPECT_EQ(r.buckets[4].correct, 3u);
  EXPECT_EQ(r.buckets[5].correct, 5u);
  EXPECT_EQ(r.buckets[6].correct, 2u);
}

TEST(SocialMessage, EveryKindRendersWithAnEmoticon) {
  for (auto kind : {SocialMessageKind::kReturnCongratulation,
                    SocialMessageKind::kMilestoneApplause,
                    SocialMessageKind::kWrongAnswerEncouragement,
                    SocialMessageKind::kAbsenceDisappointment}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SocialMessage m = social_message(kind, seed, agtest::pack().messages());
      EXPECT_EQ(m.kind, kind);
      EXPECT_TRUE(has_emoticon(m.text)) << m.text;
      EXPECT_EQ(m.celebrate, kind == SocialMessageKind::kMilestoneApplause);
      EXPECT_EQ(social_message(kind, seed, agtest::pack().messages()), m);
    }
  }
}

TEST(SocialMessage, EventReactions) {
  const Timestamp t = at("2026-03-10T09:00:00Z");
  EXPECT_EQ(message_kind_for(answered(1, t, ChallengeKind::kRecall, false)),
            SocialMessageKind::kWrongAnswerEncouragement);
  EXPECT_EQ(message_kind_for(answered(1, t, ChallengeKind::kRecall, true)), std::nullopt);
  const GameEvent trophy{2, t, BadgeAwarded{BadgeKind::kTrophy, 6}};
  EXPECT_EQ(message_kind_for(trophy), SocialMessageKind::kMilestoneApplause);
  EXPECT_TRUE(social_message(*message_kind_for(trophy), 1).celebrate);
}

TEST(SocialMessage, ReturnVisitIsALaterCalendarDay) {
  const ActivityLog log = played_at(at("2026-03-10T23:30:00Z"));
  EXPECT_FALSE(is_return_visit(log, at("2026-03-10T23:59:00Z")));
  EXPECT_TRUE(is_return_visit(log, at("2026-03-11T00:10:00Z")));
  EXPECT_FALSE(is_return_visit(ActivityLog{}, at("2026-03-11T00:10:00Z")));
}

TEST(MessageCatalog, TemplatesNeedTheEmoticonToken) {
  MessageCatalog catalog;
  EXPECT_THROW(catalog.add(SocialMessageKind::kMilestoneApplause, "Well done"), Error);
  EXPECT_EQ(catalog.missing_kinds().size(), 4u);
  catalog.add(SocialMessageKind::kMilestoneApplause, "Well done {emoticon}");
  EXPECT_EQ(catalog.missing_kinds().size(), 3u);
  try {
    social_message(SocialMessageKind::kReturnCongratulation, 0, catalog);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoTemplates);
  }
  EXPECT_TRUE(MessageCatalog::defaults().missing_kinds().empty());
}

}  // namespace
}  // namespace avatar_game
