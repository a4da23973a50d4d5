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

#ifndef AVATAR_GAME_CHALLENGE_H_
#define AVATAR_GAME_CHALLENGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "avatar_game/avatar.h"

namespace avatar_game {

inline constexpr std::size_t kImagesPerChallenge = 4;
inline constexpr std::size_t kLetterPoolSize = 12;
inline constexpr std::size_t kDefaultOptionCount = 6;

enum class ChallengeKind { kStandard, kRecognition, kRecall };

std::string_view to_string(ChallengeKind kind) noexcept;
std::optional<ChallengeKind> challenge_kind_from(std::string_view text) noexcept;

// Images and cues are parallel arrays in authored order. Presentation never
// permutes them.
using ImageRefs = std::array<std::string, kImagesPerChallenge>;
using CueTexts = std::array<std::string, kImagesPerChallenge>;

struct StandardChallenge {
  std::string challenge_id;
  std::string answer;
  ImageRefs images;
  CueTexts cues;

  bool operator==(const StandardChallenge&) const = default;
};

struct AvatarChallenge {
  std::string challenge_id;
  std::string attribute_id;
  ChallengeKind kind = ChallengeKind::kRecognition;  // recognition or recall
  ImageRefs images;
  CueTexts cues;
  std::size_t option_count = kDefaultOptionCount;  // recognition only

  bool operator==(const AvatarChallenge&) const = default;
};

using Challenge = std::variant<StandardChallenge, AvatarChallenge>;

const std::string& challenge_id(const Challenge& challenge);
ChallengeKind kind_of(const Challenge& challenge);

struct LetterPool {
  std::array<char, kLetterPoolSize> letters{};  // 'A'..'Z', presentation order
  std::uint64_t seed = 0;

  bool operator==(const LetterPool&) const = default;
};

struct RevealedLetter {
  std::size_t index = 0;
  char letter = 'A';

  bool operator==(const RevealedLetter&) const = default;
};

struct ChallengeView {
  std::string challenge_id;
  ChallengeKind kind = ChallengeKind::kStandard;
  ImageRefs images;
  // Authored cue texts. Only exposed to the player once cues_unlocked is set.
  CueTexts cues;
  std::optional<LetterPool> letter_pool;         // standard and recall
  std::optional<std::vector<std::string>> options;  // recognition only
  bool show_length = false;
  std::optional<std::size_t> length;             // set iff show_length
  std::vector<RevealedLetter> revealed;          // ascending index
  bool cues_unlocked = false;

  bool operator==(const ChallengeView&) const = default;
};

struct Verdict {
  bool correct = false;
  std::string normalized_submission;

  bool operator==(const Verdict&) const = default;
};

enum class HintKind { kRevealLetter, kUnlockCues, kEliminateOptions };

std::string_view to_string(HintKind kind) noexcept;
std::optional<HintKind> hint_kind_from(std::string_view text) noexcept;

// Normalized answer in tile form: uppercase A-Z, 1..12 letters.
// Throws kEmptyAnswer, kUnrepresentableAnswer or kAnswerTooLong.
std::string tile_answer(std::string_view answer);

// The answer's letters plus uniformly drawn A-Z fillers up to 12, in a seeded
// presentation order.
LetterPool build_letter_pool(std::string_view answer, std::uint64_t seed);

// Structural checks (4 images, 4 cues, representable answer, recall/option
// constraints). Throws kInvalidChallenge or the tile_answer errors.
void validate_challenge(const StandardChallenge& challenge);
void validate_challenge(const AvatarChallenge& challenge,
                        const AvatarSchema& schema);

// The answer text the challenge expects for this profile. Throws
// kMissingProfile for avatar challenges without a profile.
std::string expected_answer(const Challenge& challenge,
                            const AvatarProfile* profile);

ChallengeView present(const StandardChallenge& challenge, std::uint64_t seed);
ChallengeView present(const AvatarChallenge& challenge,
                      const AvatarProfile* profile, const AvatarSchema& schema,
                      std::uint64_t seed);
ChallengeView present(const Challenge& challenge, const AvatarProfile* profile,
                      const AvatarSchema& schema, std::uint64_t seed);

// Compares normalized forms. For recognition challenges, when the presented
// view is supplied the submission must also match one of its options.
Verdict check_answer(const Challenge& challenge, const AvatarProfile* profile,
                     std::string_view submission,
                     const ChallengeView* presented = nullptr);

// Returns the updated view; the input is not modified. Throws
// kHintInapplicable.
ChallengeView apply_hint(const ChallengeView& view, std::string_view answer,
                         HintKind kind);

// True if apply_hint(view, answer, kind) would succeed.
bool hint_applicable(const ChallengeView& view, std::string_view answer,
                     HintKind kind);

}  // namespace avatar_game

#endif  // AVATAR_GAME_CHALLENGE_H_
