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

#include "avatar_game/serialization.h"
#include "test_support.h"

namespace avatar_game {
namespace {

using agtest::at;
using agtest::pack;

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

TEST(Serialization, EveryEventKindRoundTrips) {
  const Timestamp t = at("2026-03-02T10:00:00Z");
  const std::vector<GameEvent> events = {
      {1, t, SessionStarted{"s", "p", "pk", 42, 6, 2, {BadgeKind::kSmiley}}},
      {2, t, ChallengePresented{"std-ocean", ChallengeKind::kStandard, 7}},
      {3, t, ChallengeAnswered{"std-ocean", ChallengeKind::kStandard, "Ocean", true, 10, 10}},
      {4, t, HintPurchased{"av-rec-pet", HintKind::kEliminateOptions, 30, 0}},
      {5, t, FreeHintGranted{"av-rec-pet", HintKind::kRevealLetter}},
      {6, t, BadgeAwarded{BadgeKind::kCake, 3}},
      {7, t, MilestoneReached{Milestone::kRecallComplete}},
      {8, t, SessionFinished{175}},
  };
  for (const auto& e : events) EXPECT_EQ(round_trip(e), e);
  const json j = events[2];
  EXPECT_EQ(j.at("kind"), "answered");
  EXPECT_EQ(j.at("at"), "2026-03-02T10:00:00Z");
  EXPECT_EQ(j.at("seq"), 3);
}

TEST(Serialization, UnknownEventKindIsRejected) {
  json j = GameEvent{1, at("2026-03-02T10:00:00Z"), SessionFinished{1}};
  j["kind"] = "teleported";
  EXPECT_THROW(j.get<GameEvent>(), std::exception);
}

TEST(Serialization, SessionStateRoundTrips) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AvatarProfile profile = agtest::profile(seed);
    const SessionState s = agtest::play_random(pack(), profile, seed, 0.6, 0.3, 9);
    EXPECT_EQ(round_trip(s), s);
  }
  EXPECT_EQ(round_trip(agtest::profile(3)), agtest::profile(3));
}

TEST(Serialization, TimestampsAreUtcIso) {
  EXPECT_EQ(format_timestamp(at("2026-12-31T23:59:59Z")), "2026-12-31T23:59:59Z");
  EXPECT_FALSE(parse_timestamp("2026-12-31 23:59:59").has_value());
  EXPECT_FALSE(parse_timestamp("2026-13-01T00:00:00Z").has_value());
  EXPECT_FALSE(parse_timestamp("2026-02-30T00:00:00Z").has_value());
}

TEST(ClientView, RecallHidesLengthAndAnswer) {
  const AvatarProfile profile = agtest::profile(6);
  const AvatarChallenge* c = pack().avatar_challenges_of(ChallengeKind::kRecall).front();
  const ChallengeView view = present(*c, &profile, pack().schema(), 1);
  json j = client_view(view);
  EXPECT_FALSE(j.contains("length"));
  EXPECT_FALSE(j.contains("cues"));
  EXPECT_FALSE(j.contains("options"));
  EXPECT_EQ(j.at("letters").get<std::string>().size(), 12u);
  EXPECT_EQ(j.at("images"), json(c->images));
  j.erase("letters");
  const std::string answer = normalize_answer(profile.value_of(c->attribute_id));
  std::string dumped = j.dump();
  for (char& ch : dumped) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  EXPECT_EQ(dumped.find("\"" + answer + "\""), std::string::npos);
  EXPECT_FALSE(j.contains("answer"));
}

TEST(ClientView, StandardShowsLengthAndUnlockedCues) {
  const StandardChallenge& c = *pack().find_standard("std-germany");
  ChallengeView view = present(c, 1);
  EXPECT_EQ(client_view(view).at("length"), 7);
  EXPECT_FALSE(client_view(view).contains("cues"));
  view = apply_hint(view, c.answer, HintKind::kUnlockCues);
  EXPECT_EQ(client_view(view).at("cues"), json(c.cues));
  view = apply_hint(view, c.answer, HintKind::kRevealLetter);
  EXPECT_EQ(client_view(view).at("revealed"),
            json::parse(R"([{"index":0,"letter":"G"}])"));
}

TEST(ClientView, RecognitionListsOptions) {
  const AvatarProfile profile = agtest::profile(6);
  const AvatarChallenge* c =
      pack().avatar_challenges_of(ChallengeKind::kRecognition).front();
  const json j = client_view(present(*c, &profile, pack().schema(), 1));
  EXPECT_EQ(j.at("options").size(), c->option_count);
  EXPECT_FALSE(j.contains("letters"));
  EXPECT_EQ(j.at("kind"), "recognition");
}

}  // namespace
}  // namespace avatar_game
