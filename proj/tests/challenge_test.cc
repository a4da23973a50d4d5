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

#include <array>
#include <set>

#include <gtest/gtest.h>

#include "avatar_game/challenge.h"
#include "avatar_game/error.h"
#include "test_support.h"

namespace avatar_game {
namespace {

using agtest::pack;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::array<int, 26> letter_counts(std::string_view text) {
  std::array<int, 26> counts{};
  for (char c : text) {
    const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    if (upper >= 'A' && upper <= 'Z') ++counts[upper - 'A'];
  }
  return counts;
}

TEST(TileAnswer, ValidatesRepresentability) {
  EXPECT_EQ(tile_answer("Germany"), "GERMANY");
  EXPECT_EQ(tile_answer(" M\xC3\xBCnchen "), "MUNCHEN");
  EXPECT_EQ(code_of([] { tile_answer("  "); }), ErrorCode::kEmptyAnswer);
  EXPECT_EQ(code_of([] { tile_answer("abcdefghijklm"); }), ErrorCode::kAnswerTooLong);
  EXPECT_EQ(code_of([] { tile_answer("r2d2"); }), ErrorCode::kUnrepresentableAnswer);
  EXPECT_EQ(code_of([] { tile_answer("new york"); }), ErrorCode::kUnrepresentableAnswer);
}

TEST(LetterPool, GermanyExample) {
  const LetterPool pool = build_letter_pool("Germany", 5);
  const auto counts = letter_counts(std::string(pool.letters.begin(), pool.letters.end()));
  const auto need = letter_counts("GERMANY");
  for (int i = 0; i < 26; ++i) EXPECT_GE(counts[i], need[i]);
  EXPECT_EQ(build_letter_pool("Germany", 5), pool);
}

// Property: for random answers of every length the pool has exactly 12 A-Z
// tiles and contains the answer as a multiset.
TEST(LetterPool, ContainsEveryAnswerMultiset) {
  Rng rng(1234);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t length = 1 + rng.below(12);
    std::string answer;
    for (std::size_t i = 0; i < length; ++i) {
      answer.push_back(static_cast<char>('A' + rng.below(26)));
    }
    const LetterPool pool = build_letter_pool(answer, rng.next());
    const std::string tiles(pool.letters.begin(), pool.letters.end());
    bool ok = tiles.size() == kLetterPoolSize;
    for (char c : tiles) ok = ok && c >= 'A' && c <= 'Z';
    const auto have = letter_counts(tiles);
    const auto need = letter_counts(answer);
    for (int i = 0; i < 26; ++i) ok = ok && have[i] >= need[i];
    if (!ok) {
      ++failures;
      ADD_FAILURE() << answer << " -> " << tiles;
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST(Present, StandardShowsLengthAndKeepsImageOrder) {
  const StandardChallenge& c = pack().standard_challenges().front();
  const ChallengeView view = present(c, 17);
  EXPECT_EQ(view.kind, ChallengeKind::kStandard);
  EXPECT_EQ(view.images, c.images);
  EXPECT_TRUE(view.show_length);
  EXPECT_EQ(view.length, tile_answer(c.answer).size());
  EXPECT_TRUE(view.letter_pool.has_value());
  EXPECT_FALSE(view.options.has_value());
  EXPECT_FALSE(view.cues_unlocked);
  EXPECT_EQ(present(c, 17), view);
}

TEST(Present, RecallHidesLength) {
  const AvatarProfile profile = agtest::profile(4);
  for (const AvatarChallenge* c : pack().avatar_challenges_of(ChallengeKind::kRecall)) {
    const ChallengeView view = present(*c, &profile, pack().schema(), 8);
    EXPECT_FALSE(view.show_length);
    EXPECT_FALSE(view.length.has_value());
    ASSERT_TRUE(view.letter_pool.has_value());
    const auto have = letter_counts(
        std::string(view.letter_pool->letters.begin(), view.letter_pool->letters.end()));
    const auto need = letter_counts(profile.value_of(c->attribute_id));
    for (int i = 0; i < 26; ++i) EXPECT_GE(have[i], need[i]);
  }
}

TEST(Present, RecognitionOffersTheAnswerOnceAmongDistinctOptions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AvatarProfile profile = agtest::profile(seed);
    for (const AvatarChallenge* c :
         pack().avatar_challenges_of(ChallengeKind::kRecognition)) {
      const ChallengeView view = present(*c, &profile, pack().schema(), seed * 7);
      ASSERT_TRUE(view.options.has_value());
      ASSERT_EQ(view.options->size(), c->option_count);
      std::set<std::string> normalized;
      for (const auto& option : *view.options) normalized.insert(normalize_answer(option));
      EXPECT_EQ(normalized.size(), c->option_count);
      EXPECT_EQ(normalized.count(normalize_answer(profile.value_of(c->attribute_id))), 1u);
      EXPECT_FALSE(view.letter_pool.has_value());
    }
  }
}

TEST(Present, AvatarChallengeNeedsAProfile) {
  const AvatarChallenge* c = pack().avatar_challenges_of(ChallengeKind::kRecall).front();
  EXPECT_EQ(code_of([&] { present(*c, nullptr, pack().schema(), 1); }),
            ErrorCode::kMissingProfile);
}

TEST(CheckAnswer, ComparesNormalizedForms) {
  const StandardChallenge& c = *pack().find_standard("std-germany");
  EXPECT_TRUE(check_answer(c, nullptr, "  germany ").correct);
  EXPECT_TRUE(check_answer(c, nullptr, "GERMANY").correct);
  EXPECT_FALSE(check_answer(c, nullptr, "germanyy").correct);
  EXPECT_EQ(check_answer(c, nullptr, " GerMany").normalized_submission, "germany");
  EXPECT_EQ(code_of([&] { check_answer(c, nullptr, " "); }), ErrorCode::kEmptyAnswer);
}

TEST(CheckAnswer, RecognitionSubmissionMustBeAPresentedOption) {
  const AvatarProfile profile = agtest::profile(9);
  const AvatarChallenge* c =
      pack().avatar_challenges_of(ChallengeKind::kRecognition).front();
  ChallengeView view = present(*c, &profile, pack().schema(), 3);
  const std::string answer = profile.value_of(c->attribute_id);
  EXPECT_TRUE(check_answer(*c, &profile, answer, &view).correct);
  std::erase_if(*view.options, [&](const std::string& option) {
    return normalize_answer(option) == normalize_answer(answer);
  });
  EXPECT_FALSE(check_answer(*c, &profile, answer, &view).correct);
}

TEST(Hints, RevealLetterUncoversPositionsInOrder) {
  const StandardChallenge& c = *pack().find_standard("std-germany");
  ChallengeView view = present(c, 2);
  view = apply_hint(view, c.answer, HintKind::kRevealLetter);
  ASSERT_EQ(view.revealed.size(), 1u);
  EXPECT_EQ(view.revealed[0], (RevealedLetter{0, 'G'}));
  view = apply_hint(view, c.answer, HintKind::kRevealLetter);
  EXPECT_EQ(view.revealed[1], (RevealedLetter{1, 'E'}));
  for (int i = 2; i < 7; ++i) view = apply_hint(view, c.answer, HintKind::kRevealLetter);
  EXPECT_FALSE(hint_applicable(view, c.answer, HintKind::kRevealLetter));
  EXPECT_EQ(code_of([&] { apply_hint(view, c.answer, HintKind::kRevealLetter); }),
            ErrorCode::kHintInapplicable);
}

TEST(Hints, UnlockCuesOnce) {
  const StandardChallenge& c = *pack().find_standard("std-germany");
  const ChallengeView before = present(c, 2);
  const ChallengeView after = apply_hint(before, c.answer, HintKind::kUnlockCues);
  EXPECT_FALSE(before.cues_unlocked);
  EXPECT_TRUE(after.cues_unlocked);
  EXPECT_EQ(after.cues, c.cues);
  EXPECT_FALSE(hint_applicable(after, c.answer, HintKind::kUnlockCues));
}

TEST(Hints, EliminateOptionsKeepsTheAnswer) {
  const AvatarProfile profile = agtest::profile(21);
  const AvatarChallenge* c =
      pack().avatar_challenges_of(ChallengeKind::kRecognition).front();
  const std::string answer = profile.value_of(c->attribute_id);
  ChallengeView view = present(*c, &profile, pack().schema(), 5);
  const std::size_t before = view.options->size();
  view = apply_hint(view, answer, HintKind::kEliminateOptions);
  EXPECT_EQ(view.options->size(), before - 2);
  EXPECT_TRUE(check_answer(*c, &profile, answer, &view).correct);
  // Down to the answer and one distractor: nothing left to eliminate.
  view = apply_hint(view, answer, HintKind::kEliminateOptions);
  EXPECT_EQ(view.options->size(), 2u);
  EXPECT_FALSE(hint_applicable(view, answer, HintKind::kEliminateOptions));

  const StandardChallenge& s = *pack().find_standard("std-germany");
  EXPECT_FALSE(hint_applicable(present(s, 1), s.answer, HintKind::kEliminateOptions));
}

TEST(ValidateChallenge, RejectsMalformedChallenges) {
  StandardChallenge bad = *pack().find_standard("std-germany");
  bad.images[2].clear();
  EXPECT_EQ(code_of([&] { validate_challenge(bad); }), ErrorCode::kInvalidChallenge);

  AvatarChallenge unknown = *pack().avatar_challenges_of(ChallengeKind::kRecall).front();
  unknown.attribute_id = "shoe_size";
  EXPECT_EQ(code_of([&] { validate_challenge(unknown, pack().schema()); }),
            ErrorCode::kUnknownAttribute);

  AvatarChallenge few = *pack().avatar_challenges_of(ChallengeKind::kRecognition).front();
  few.option_count = 1;
  EXPECT_EQ(code_of([&] { validate_challenge(few, pack().schema()); }),
            ErrorCode::kInvalidChallenge);
}

}  // namespace
}  // namespace avatar_game
