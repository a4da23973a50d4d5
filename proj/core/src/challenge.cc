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

#include "avatar_game/challenge.h"

#include <algorithm>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"

namespace avatar_game {
namespace {

const AvatarProfile& require_profile(const AvatarProfile* profile,
                                     const AvatarChallenge& challenge) {
  if (profile == nullptr) {
    throw Error(ErrorCode::kMissingProfile,
                "avatar challenge '" + challenge.challenge_id +
                    "' needs an avatar profile");
  }
  return *profile;
}

void check_media(const std::string& id, const ImageRefs& images,
                 const CueTexts& cues) {
  for (std::size_t i = 0; i < kImagesPerChallenge; ++i) {
    if (images[i].empty()) {
      throw Error(ErrorCode::kInvalidChallenge,
                  "challenge '" + id + "' image " + std::to_string(i) + " is empty");
    }
    if (cues[i].empty()) {
      throw Error(ErrorCode::kInvalidChallenge,
                  "challenge '" + id + "' cue " + std::to_string(i) + " is empty");
    }
  }
}

bool same_answer(std::string_view a, std::string_view b) {
  return normalize_answer(a) == normalize_answer(b);
}

}  // namespace

std::string_view to_string(ChallengeKind kind) noexcept {
  switch (kind) {
    case ChallengeKind::kStandard: return "standard";
    case ChallengeKind::kRecognition: return "recognition";
    case ChallengeKind::kRecall: return "recall";
  }
  return "standard";
}

std::optional<ChallengeKind> challenge_kind_from(std::string_view text) noexcept {
  if (text == "standard") return ChallengeKind::kStandard;
  if (text == "recognition") return ChallengeKind::kRecognition;
  if (text == "recall") return ChallengeKind::kRecall;
  return std::nullopt;
}

std::string_view to_string(HintKind kind) noexcept {
  switch (kind) {
    case HintKind::kRevealLetter: return "reveal_letter";
    case HintKind::kUnlockCues: return "unlock_cues";
    case HintKind::kEliminateOptions: return "eliminate_options";
  }
  return "unlock_cues";
}

std::optional<HintKind> hint_kind_from(std::string_view text) noexcept {
  if (text == "reveal_letter") return HintKind::kRevealLetter;
  if (text == "unlock_cues") return HintKind::kUnlockCues;
  if (text == "eliminate_options") return HintKind::kEliminateOptions;
  return std::nullopt;
}

const std::string& challenge_id(const Challenge& challenge) {
  return std::visit([](const auto& c) -> const std::string& { return c.challenge_id; },
                    challenge);
}

ChallengeKind kind_of(const Challenge& challenge) {
  if (const auto* avatar = std::get_if<AvatarChallenge>(&challenge)) {
    return avatar->kind;
  }
  return ChallengeKind::kStandard;
}

std::string tile_answer(std::string_view answer) {
  std::string norm = normalize_answer(answer);
  if (!is_letters_only(norm)) {
    throw Error(ErrorCode::kUnrepresentableAnswer,
                "answer '" + std::string(answer) + "' is not letters A-Z only");
  }
  if (norm.size() > kLetterPoolSize) {
    throw Error(ErrorCode::kAnswerTooLong,
                "answer '" + std::string(answer) + "' has " +
                    std::to_string(norm.size()) + " letters, limit is 12");
  }
  for (char& c : norm) c = static_cast<char>(c - 'a' + 'A');
  return norm;
}

LetterPool build_letter_pool(std::string_view answer, std::uint64_t seed) {
  const std::string letters = tile_answer(answer);
  LetterPool pool;
  pool.seed = seed;
  Rng rng(seed);
  std::size_t i = 0;
  for (char c : letters) pool.letters[i++] = c;
  for (; i < kLetterPoolSize; ++i) {
    pool.letters[i] = static_cast<char>('A' + rng.below(26));
  }
  rng.shuffle(std::span<char>(pool.letters));
  return pool;
}

void validate_challenge(const StandardChallenge& challenge) {
  if (challenge.challenge_id.empty()) {
    throw Error(ErrorCode::kInvalidChallenge, "challenge with empty id");
  }
  check_media(challenge.challenge_id, challenge.images, challenge.cues);
  tile_answer(challenge.answer);
}

void validate_challenge(const AvatarChallenge& challenge,
                        const AvatarSchema& schema) {
  if (challenge.challenge_id.empty()) {
    throw Error(ErrorCode::kInvalidChallenge, "challenge with empty id");
  }
  check_media(challenge.challenge_id, challenge.images, challenge.cues);
  if (challenge.kind == ChallengeKind::kStandard) {
    throw Error(ErrorCode::kInvalidChallenge,
                "avatar challenge '" + challenge.challenge_id +
                    "' must be recognition or recall");
  }
  const ValuePool& pool = schema.pool_for(challenge.attribute_id);
  if (challenge.kind == ChallengeKind::kRecognition) {
    if (challenge.option_count < 2) {
      throw Error(ErrorCode::kInvalidChallenge,
                  "recognition challenge '" + challenge.challenge_id +
                      "' needs option_count >= 2");
    }
    if (challenge.option_count > pool.values.size()) {
      throw Error(ErrorCode::kInvalidChallenge,
                  "recognition challenge '" + challenge.challenge_id +
                      "' asks for more options than its pool holds");
    }
  } else {
    // Every value the profile could be assigned must fit the tile keyboard.
    for (const auto& value : pool.values) tile_answer(value);
  }
}

std::string expected_answer(const Challenge& challenge,
                            const AvatarProfile* profile) {
  if (const auto* standard = std::get_if<StandardChallenge>(&challenge)) {
    return standard->answer;
  }
  const auto& avatar = std::get<AvatarChallenge>(challenge);
  return require_profile(profile, avatar).value_of(avatar.attribute_id);
}

ChallengeView present(const StandardChallenge& challenge, std::uint64_t seed) {
  ChallengeView view;
  view.challenge_id = challenge.challenge_id;
  view.kind = ChallengeKind::kStandard;
  view.images = challenge.images;
  view.cues = challenge.cues;
  view.letter_pool = build_letter_pool(challenge.answer, seed);
  view.show_length = true;
  view.length = tile_answer(challenge.answer).size();
  return view;
}

ChallengeView present(const AvatarChallenge& challenge,
                      const AvatarProfile* profile, const AvatarSchema& schema,
                      std::uint64_t seed) {
  const AvatarProfile& owner = require_profile(profile, challenge);
  const std::string& assigned = owner.value_of(challenge.attribute_id);
  ChallengeView view;
  view.challenge_id = challenge.challenge_id;
  view.kind = challenge.kind;
  view.images = challenge.images;
  view.cues = challenge.cues;
  view.show_length = false;
  if (challenge.kind == ChallengeKind::kRecognition) {
    if (challenge.option_count < 2) {
      throw Error(ErrorCode::kInvalidChallenge,
                  "recognition challenge needs at least 2 options");
    }
    std::vector<std::string> options = distractors_for(
        owner, schema, challenge.attribute_id, challenge.option_count - 1, seed);
    options.push_back(assigned);
    Rng rng(derive_seed(seed, "options"));
    rng.shuffle(options);
    view.options = std::move(options);
  } else if (challenge.kind == ChallengeKind::kRecall) {
    view.letter_pool = build_letter_pool(assigned, seed);
  } else {
    throw Error(ErrorCode::kInvalidChallenge,
                "avatar challenge '" + challenge.challenge_id +
                    "' must be recognition or recall");
  }
  return view;
}

ChallengeView present(const Challenge& challenge, const AvatarProfile* profile,
                      const AvatarSchema& schema, std::uint64_t seed) {
  if (const auto* standard = std::get_if<StandardChallenge>(&challenge)) {
    return present(*standard, seed);
  }
  return present(std::get<AvatarChallenge>(challenge), profile, schema, seed);
}

Verdict check_answer(const Challenge& challenge, const AvatarProfile* profile,
                     std::string_view submission,
                     const ChallengeView* presented) {
  Verdict verdict;
  verdict.normalized_submission = normalize_answer(submission);
  const std::string expected = normalize_answer(expected_answer(challenge, profile));
  verdict.correct = verdict.normalized_submission == expected;
  if (verdict.correct && kind_of(challenge) == ChallengeKind::kRecognition &&
      presented != nullptr && presented->options) {
    const auto& options = *presented->options;
    verdict.correct = std::any_of(options.begin(), options.end(), [&](const auto& o) {
      return normalize_answer(o) == verdict.normalized_submission;
    });
  }
  return verdict;
}

bool hint_applicable(const ChallengeView& view, std::string_view answer,
                     HintKind kind) {
  switch (kind) {
    case HintKind::kUnlockCues:
      return !view.cues_unlocked;
    case HintKind::kRevealLetter:
      return view.letter_pool.has_value() &&
             view.revealed.size() < tile_answer(answer).size();
    case HintKind::kEliminateOptions: {
      if (!view.options || view.options->size() <= 2) return false;
      const auto wrong = std::count_if(
          view.options->begin(), view.options->end(),
          [&](const auto& o) { return !same_answer(o, answer); });
      return wrong >= 2;
    }
  }
  return false;
}

ChallengeView apply_hint(const ChallengeView& view, std::string_view answer,
                         HintKind kind) {
  if (!hint_applicable(view, answer, kind)) {
    throw Error(ErrorCode::kHintInapplicable,
                std::string(to_string(kind)) + " is not applicable to challenge '" +
                    view.challenge_id + "'");
  }
  ChallengeView next = view;
  switch (kind) {
    case HintKind::kUnlockCues:
      next.cues_unlocked = true;
      break;
    case HintKind::kRevealLetter: {
      const std::string letters = tile_answer(answer);
      std::size_t index = 0;
      while (std::any_of(next.revealed.begin(), next.revealed.end(),
                         [&](const auto& r) { return r.index == index; })) {
        ++index;
      }
      next.revealed.push_back({index, letters[index]});
      std::sort(next.revealed.begin(), next.revealed.end(),
                [](const auto& a, const auto& b) { return a.index < b.index; });
      break;
    }
    case HintKind::kEliminateOptions: {
      auto& options = *next.options;
      int removed = 0;
      for (auto it = options.begin(); it != options.end() && removed < 2;) {
        if (!same_answer(*it, answer)) {
          it = options.erase(it);
          ++removed;
        } else {
          ++it;
        }
      }
      break;
    }
  }
  return next;
}

}  // namespace avatar_game
