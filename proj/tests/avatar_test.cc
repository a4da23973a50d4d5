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

#include <map>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "avatar_game/avatar.h"
#include "avatar_game/error.h"
#include "test_support.h"

namespace avatar_game {
namespace {

using agtest::pack;

ValuePool letters_pool(std::string id, std::size_t n) {
  ValuePool pool{std::move(id), {}};
  for (std::size_t i = 0; i < n; ++i) {
    pool.values.push_back(std::string{static_cast<char>('a' + i / 26),
                                      static_cast<char>('a' + i % 26)});
  }
  return pool;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(NormalizeAnswer, FoldsCaseSpacingAndDiacritics) {
  EXPECT_EQ(normalize_answer("  Teal "), "teal");
  EXPECT_EQ(normalize_answer("New   York"), "new york");
  EXPECT_EQ(normalize_answer("Zo\xC3\xAB"), "zoe");             // precomposed
  EXPECT_EQ(normalize_answer("Zoe\xCC\x88"), "zoe");            // combining
  EXPECT_EQ(normalize_answer("\xC3\x85SA"), "asa");
  EXPECT_EQ(normalize_answer("Stra\xC3\x9F" "e"), "strasse");
}

TEST(NormalizeAnswer, EmptyAfterNormalizationIsAnError) {
  EXPECT_EQ(code_of([] { normalize_answer(""); }), ErrorCode::kEmptyAnswer);
  EXPECT_EQ(code_of([] { normalize_answer(" \t\n"); }), ErrorCode::kEmptyAnswer);
}

TEST(ValidatePool, EntropyFloorIsThirtyTwo) {
  EXPECT_NO_THROW(validate_pool(letters_pool("ok", 32)));
  EXPECT_EQ(code_of([] { validate_pool(letters_pool("small", 31)); }),
            ErrorCode::kEntropyFloor);
}

TEST(ValidatePool, RejectsDuplicatesAfterNormalization) {
  ValuePool pool = letters_pool("dup", 32);
  pool.values.push_back("AA");  // same as "aa"
  EXPECT_EQ(code_of([&] { validate_pool(pool); }), ErrorCode::kInvalidPool);
}

TEST(ValidatePool, RejectsValuesThatCannotBeTiled) {
  ValuePool digits = letters_pool("digits", 32);
  digits.values[3] = "r2d2";
  EXPECT_EQ(code_of([&] { validate_pool(digits); }), ErrorCode::kInvalidPool);
  ValuePool longer = letters_pool("long", 32);
  longer.values[0] = "abcdefghijklm";
  EXPECT_EQ(code_of([&] { validate_pool(longer); }), ErrorCode::kInvalidPool);
}

TEST(AvatarSchema, UnresolvedPoolIsRejected) {
  std::vector<AttributeDescriptor> attrs{{"colour", "Colour?", "colours"}};
  EXPECT_EQ(code_of([&] { AvatarSchema(attrs, {letters_pool("other", 32)}); }),
            ErrorCode::kUnresolvedPool);
}

TEST(AvatarSchema, DuplicateAttributeIsRejected) {
  std::vector<AttributeDescriptor> attrs{{"a", "A?", "p"}, {"a", "A again?", "p"}};
  EXPECT_EQ(code_of([&] { AvatarSchema(attrs, {letters_pool("p", 32)}); }),
            ErrorCode::kInvalidSchema);
}

TEST(GenerateProfile, AssignsEveryAttributeFromItsPool) {
  const AvatarSchema& schema = pack().schema();
  const AvatarProfile profile = generate_profile(7, schema);
  ASSERT_EQ(profile.assignments.size(), schema.attributes().size());
  for (const auto& attr : schema.attributes()) {
    const auto& values = schema.pool_for(attr.attribute_id).values;
    EXPECT_NE(std::find(values.begin(), values.end(), profile.value_of(attr.attribute_id)),
              values.end());
  }
  EXPECT_EQ(code_of([&] { profile.value_of("shoe_size"); }),
            ErrorCode::kUnknownAttribute);
}

TEST(GenerateProfile, IsAPureFunctionOfTheSeed) {
  const AvatarSchema& schema = pack().schema();
  EXPECT_EQ(generate_profile(99, schema), generate_profile(99, schema));
  std::set<std::map<std::string, std::string>> distinct;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    distinct.insert(generate_profile(seed, schema).assignments);
  }
  EXPECT_EQ(distinct.size(), 50u);
}

// Pearson goodness of fit against the uniform distribution, per attribute.
TEST(GenerateProfile, EachAttributeIsUniformOverItsPool) {
  const AvatarSchema& schema = pack().schema();
  constexpr int kSeeds = 1000;
  std::map<std::string, std::map<std::string, int>> counts;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const AvatarProfile profile = generate_profile(derive_seed(2024, seed), schema);
    for (const auto& [attr, value] : profile.assignments) ++counts[attr][value];
  }
  for (const auto& attr : schema.attributes()) {
    const auto& values = schema.pool_for(attr.attribute_id).values;
    const double expected = static_cast<double>(kSeeds) / values.size();
    double statistic = 0;
    for (const auto& value : values) {
      const double observed = counts[attr.attribute_id][value];
      statistic += (observed - expected) * (observed - expected) / expected;
    }
    boost::math::chi_squared dist(static_cast<double>(values.size() - 1));
    const double p_value = boost::math::cdf(boost::math::complement(dist, statistic));
    EXPECT_GT(p_value, 0.01) << attr.attribute_id << " chi2=" << statistic;
  }
}

TEST(Distractors, AreDistinctPoolValuesOtherThanTheAnswer) {
  const AvatarSchema& schema = pack().schema();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const AvatarProfile profile = generate_profile(seed, schema);
    for (const auto& attr : schema.attributes()) {
      const auto picks = distractors_for(profile, schema, attr.attribute_id, 5, seed);
      ASSERT_EQ(picks.size(), 5u);
      std::set<std::string> normalized;
      for (const auto& pick : picks) normalized.insert(normalize_answer(pick));
      EXPECT_EQ(normalized.size(), 5u);
      EXPECT_EQ(normalized.count(normalize_answer(profile.value_of(attr.attribute_id))),
                0u);
    }
  }
  const AvatarProfile profile = generate_profile(3, schema);
  EXPECT_EQ(distractors_for(profile, schema, "favourite_colour", 5, 11),
            distractors_for(profile, schema, "favourite_colour", 5, 11));
}

TEST(Distractors, CannotExceedThePool) {
  const AvatarSchema& schema = pack().schema();
  const AvatarProfile profile = generate_profile(3, schema);
  const std::size_t size = schema.pool_for("favourite_colour").values.size();
  EXPECT_EQ(distractors_for(profile, schema, "favourite_colour", size - 1, 1).size(),
            size - 1);
  EXPECT_EQ(code_of([&] {
              distractors_for(profile, schema, "favourite_colour", size, 1);
            }),
            ErrorCode::kDistractorCount);
}

}  // namespace
}  // namespace avatar_game
