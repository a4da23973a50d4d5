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

#ifndef AVATAR_GAME_AVATAR_H_
#define AVATAR_GAME_AVATAR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/clock.h"

namespace avatar_game {

// Minimum number of candidate answers per attribute. Keeps the blind-guess
// probability per attribute at or below 1/32.
inline constexpr std::size_t kEntropyFloor = 32;
// Longest answer the 12-tile letter keyboard can express.
inline constexpr std::size_t kMaxAnswerLetters = 12;

struct AttributeDescriptor {
  std::string attribute_id;
  std::string display_question;
  std::string value_pool_ref;

  bool operator==(const AttributeDescriptor&) const = default;
};

struct ValuePool {
  std::string pool_id;
  std::vector<std::string> values;

  bool operator==(const ValuePool&) const = default;
};

struct AvatarProfile {
  std::string profile_id;
  std::uint64_t seed = 0;
  // attribute_id -> assigned value (as authored in the pool).
  std::map<std::string, std::string> assignments;
  Timestamp created_at{};

  bool operator==(const AvatarProfile&) const = default;

  // Throws kUnknownAttribute if the attribute is not assigned.
  const std::string& value_of(std::string_view attribute_id) const;
};

// Case-folds, trims, collapses internal whitespace and folds Latin diacritics
// to their base letters ("  MÜNCHEN " -> "munchen"). Throws kEmptyAnswer when
// nothing is left.
std::string normalize_answer(std::string_view raw);

// True if the normalized form consists only of a-z.
bool is_letters_only(std::string_view normalized);

// Checks the ValuePool invariants: distinct after normalization, at least
// kEntropyFloor values, each value 1..12 letters a-z after normalization.
// Throws kEntropyFloor or kInvalidPool.
void validate_pool(const ValuePool& pool);

// A validated attribute schema together with the pools it references.
class AvatarSchema {
 public:
  AvatarSchema() = default;
  // Throws kUnresolvedPool, kEntropyFloor, kInvalidPool or kInvalidSchema.
  AvatarSchema(std::vector<AttributeDescriptor> attributes,
               std::vector<ValuePool> pools);

  std::span<const AttributeDescriptor> attributes() const { return attributes_; }
  std::span<const ValuePool> pools() const { return pools_; }

  const AttributeDescriptor& attribute(std::string_view attribute_id) const;
  const ValuePool& pool_for(std::string_view attribute_id) const;
  bool has_attribute(std::string_view attribute_id) const;

 private:
  std::vector<AttributeDescriptor> attributes_;
  std::vector<ValuePool> pools_;
  std::map<std::string, std::size_t, std::less<>> attribute_index_;
  std::map<std::string, std::size_t, std::less<>> pool_index_;
};

// Pure function of (seed, schema). Each attribute draws from its own derived
// stream, so adding an attribute does not perturb the others.
AvatarProfile generate_profile(std::uint64_t seed, const AvatarSchema& schema,
                               Timestamp created_at = Timestamp{});

AvatarProfile generate_profile(std::uint64_t seed,
                               std::span<const AttributeDescriptor> schema,
                               std::span<const ValuePool> pools,
                               Timestamp created_at = Timestamp{});

// n distinct pool values, none normalizing to the profile's assigned value,
// deterministic in seed. Throws kDistractorCount when n > pool_size - 1.
std::vector<std::string> distractors_for(const AvatarProfile& profile,
                                         const AvatarSchema& schema,
                                         std::string_view attribute_id,
                                         std::size_t n, std::uint64_t seed);

}  // namespace avatar_game

#endif  // AVATAR_GAME_AVATAR_H_
