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

#include "avatar_game/avatar.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"

namespace avatar_game {
namespace {

// Base-letter folds for U+00C0..U+00FF (lowercase result). Empty entries are
// not letters and pass through unchanged.
constexpr std::array<std::string_view, 64> kLatin1Fold = {
    "a", "a", "a", "a", "a", "a", "ae", "c",   // C0-C7
    "e", "e", "e", "e", "i", "i", "i", "i",    // C8-CF
    "d", "n", "o", "o", "o", "o", "o", "",     // D0-D7 (D7 is x-sign)
    "o", "u", "u", "u", "u", "y", "th", "ss",  // D8-DF
    "a", "a", "a", "a", "a", "a", "ae", "c",   // E0-E7
    "e", "e", "e", "e", "i", "i", "i", "i",    // E8-EF
    "d", "n", "o", "o", "o", "o", "o", "",     // F0-F7 (F7 is division sign)
    "o", "u", "u", "u", "u", "y", "th", "y",   // F8-FF
};

// Runs over U+0100..U+017F (Latin Extended-A).
struct FoldRun {
  char32_t first;
  char32_t last;
  std::string_view base;
};

constexpr std::array<FoldRun, 23> kExtendedAFold = {{
    {0x0100, 0x0105, "a"}, {0x0106, 0x010D, "c"}, {0x010E, 0x0111, "d"},
    {0x0112, 0x011B, "e"}, {0x011C, 0x0123, "g"}, {0x0124, 0x0127, "h"},
    {0x0128, 0x0131, "i"}, {0x0132, 0x0133, "ij"}, {0x0134, 0x0135, "j"},
    {0x0136, 0x0138, "k"}, {0x0139, 0x0142, "l"}, {0x0143, 0x0149, "n"},
    {0x014A, 0x014B, "n"}, {0x014C, 0x0151, "o"}, {0x0152, 0x0153, "oe"},
    {0x0154, 0x0159, "r"}, {0x015A, 0x0161, "s"}, {0x0162, 0x0167, "t"},
    {0x0168, 0x0173, "u"}, {0x0174, 0x0175, "w"}, {0x0176, 0x0178, "y"},
    {0x0179, 0x017E, "z"}, {0x017F, 0x017F, "s"},
}};

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x00A0: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

// Decodes one UTF-8 sequence starting at text[i]. Malformed input yields the
// raw byte with length 1 and `valid` false.
struct Decoded {
  char32_t cp;
  std::size_t length;
  bool valid;
};

Decoded decode_utf8(std::string_view text, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(text[i]);
  if (b0 < 0x80) return {b0, 1, true};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1, false};
  }
  if (i + len > text.size()) return {b0, 1, false};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(text[i + k]);
    if ((b & 0xC0) != 0x80) return {b0, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len, true};
}

std::string_view fold(char32_t cp) {
  if (cp >= 0x00C0 && cp <= 0x00FF) return kLatin1Fold[cp - 0x00C0];
  for (const auto& run : kExtendedAFold) {
    if (cp >= run.first && cp <= run.last) return run.base;
  }
  return {};
}

}  // namespace

std::string normalize_answer(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < raw.size();) {
    const Decoded d = decode_utf8(raw, i);
    const std::string_view bytes = raw.substr(i, d.length);
    i += d.length;
    if (d.valid && is_space(d.cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (d.valid && is_combining_mark(d.cp)) continue;
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (d.valid && d.cp < 0x80) {
      char c = static_cast<char>(d.cp);
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      out.push_back(c);
      continue;
    }
    const std::string_view base = d.valid ? fold(d.cp) : std::string_view{};
    if (!base.empty()) {
      out.append(base);
    } else {
      out.append(bytes);
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyAnswer, "answer is empty after normalization");
  }
  return out;
}

bool is_letters_only(std::string_view normalized) {
  return !normalized.empty() &&
         std::all_of(normalized.begin(), normalized.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

const std::string& AvatarProfile::value_of(std::string_view attribute_id) const {
  auto it = assignments.find(std::string(attribute_id));
  if (it == assignments.end()) {
    throw Error(ErrorCode::kUnknownAttribute,
                "profile has no attribute '" + std::string(attribute_id) + "'");
  }
  return it->second;
}

void validate_pool(const ValuePool& pool) {
  if (pool.values.size() < kEntropyFloor) {
    throw Error(ErrorCode::kEntropyFloor,
                "pool '" + pool.pool_id + "' has " +
                    std::to_string(pool.values.size()) + " values, need at least " +
                    std::to_string(kEntropyFloor));
  }
  std::set<std::string> seen;
  for (const auto& value : pool.values) {
    std::string norm;
    try {
      norm = normalize_answer(value);
    } catch (const Error&) {
      throw Error(ErrorCode::kInvalidPool,
                  "pool '" + pool.pool_id + "' contains an empty value");
    }
    if (!is_letters_only(norm)) {
      throw Error(ErrorCode::kInvalidPool, "pool '" + pool.pool_id + "' value '" +
                                               value + "' is not letters A-Z only");
    }
    if (norm.size() > kMaxAnswerLetters) {
      throw Error(ErrorCode::kInvalidPool, "pool '" + pool.pool_id + "' value '" +
                                               value + "' exceeds 12 letters");
    }
    if (!seen.insert(norm).second) {
      throw Error(ErrorCode::kInvalidPool, "pool '" + pool.pool_id +
                                               "' has duplicate value '" + value + "'");
    }
  }
}

AvatarSchema::AvatarSchema(std::vector<AttributeDescriptor> attributes,
                           std::vector<ValuePool> pools)
    : attributes_(std::move(attributes)), pools_(std::move(pools)) {
  for (std::size_t i = 0; i < pools_.size(); ++i) {
    if (!pool_index_.emplace(pools_[i].pool_id, i).second) {
      throw Error(ErrorCode::kInvalidSchema,
                  "duplicate pool id '" + pools_[i].pool_id + "'");
    }
  }
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const auto& attr = attributes_[i];
    if (attr.attribute_id.empty()) {
      throw Error(ErrorCode::kInvalidSchema, "attribute with empty id");
    }
    if (!attribute_index_.emplace(attr.attribute_id, i).second) {
      throw Error(ErrorCode::kInvalidSchema,
                  "duplicate attribute id '" + attr.attribute_id + "'");
    }
    auto it = pool_index_.find(attr.value_pool_ref);
    if (it == pool_index_.end()) {
      throw Error(ErrorCode::kUnresolvedPool,
                  "attribute '" + attr.attribute_id + "' references missing pool '" +
                      attr.value_pool_ref + "'");
    }
    validate_pool(pools_[it->second]);
  }
}

const AttributeDescriptor& AvatarSchema::attribute(
    std::string_view attribute_id) const {
  auto it = attribute_index_.find(attribute_id);
  if (it == attribute_index_.end()) {
    throw Error(ErrorCode::kUnknownAttribute,
                "unknown attribute '" + std::string(attribute_id) + "'");
  }
  return attributes_[it->second];
}

const ValuePool& AvatarSchema::pool_for(std::string_view attribute_id) const {
  const auto& attr = attribute(attribute_id);
  return pools_[pool_index_.find(attr.value_pool_ref)->second];
}

bool AvatarSchema::has_attribute(std::string_view attribute_id) const {
  return attribute_index_.find(attribute_id) != attribute_index_.end();
}

AvatarProfile generate_profile(std::uint64_t seed, const AvatarSchema& schema,
                               Timestamp created_at) {
  AvatarProfile profile;
  char id[32];
  std::snprintf(id, sizeof id, "avatar-%016llx",
                static_cast<unsigned long long>(seed));
  profile.profile_id = id;
  profile.seed = seed;
  profile.created_at = created_at;
  for (const auto& attr : schema.attributes()) {
    const ValuePool& pool = schema.pool_for(attr.attribute_id);
    Rng rng(derive_seed(seed, attr.attribute_id));
    profile.assignments[attr.attribute_id] =
        pool.values[static_cast<std::size_t>(rng.below(pool.values.size()))];
  }
  return profile;
}

AvatarProfile generate_profile(std::uint64_t seed,
                               std::span<const AttributeDescriptor> schema,
                               std::span<const ValuePool> pools,
                               Timestamp created_at) {
  AvatarSchema validated({schema.begin(), schema.end()},
                         {pools.begin(), pools.end()});
  return generate_profile(seed, validated, created_at);
}

std::vector<std::string> distractors_for(const AvatarProfile& profile,
                                         const AvatarSchema& schema,
                                         std::string_view attribute_id,
                                         std::size_t n, std::uint64_t seed) {
  const std::string assigned = normalize_answer(profile.value_of(attribute_id));
  const ValuePool& pool = schema.pool_for(attribute_id);
  if (n + 1 > pool.values.size()) {
    throw Error(ErrorCode::kDistractorCount,
                "requested " + std::to_string(n) + " distractors from a pool of " +
                    std::to_string(pool.values.size()));
  }
  std::vector<const std::string*> candidates;
  candidates.reserve(pool.values.size());
  for (const auto& value : pool.values) {
    if (normalize_answer(value) != assigned) candidates.push_back(&value);
  }
  if (n > candidates.size()) {
    throw Error(ErrorCode::kDistractorCount,
                "not enough distinct distractors for '" +
                    std::string(attribute_id) + "'");
  }
  Rng rng(derive_seed(seed, attribute_id));
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t idx : rng.sample_indices(candidates.size(), n)) {
    out.push_back(*candidates[idx]);
  }
  return out;
}

}  // namespace avatar_game
