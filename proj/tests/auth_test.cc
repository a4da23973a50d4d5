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

#include <bit>
#include <set>

#include <boost/rational.hpp>
#include <gtest/gtest.h>

#include "avatar_game/auth.h"
#include "avatar_game/error.h"
#include "test_support.h"

namespace avatar_game {
namespace {

using agtest::at;
using Fraction = boost::rational<std::int64_t>;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// A profile over `k` attributes q0..q{k-1}, each assigned "v0".
AvatarProfile small_profile(std::size_t k) {
  AvatarProfile profile;
  profile.profile_id = "small";
  for (std::size_t i = 0; i < k; ++i) profile.assignments["q" + std::to_string(i)] = "v0";
  return profile;
}

ResetAttempt attempt_for(const AvatarProfile& profile) {
  ResetAttempt attempt;
  for (const auto& [id, value] : profile.assignments) attempt.questions.push_back(id);
  return attempt;
}

std::map<std::string, std::string> answers_from_bitmap(const AvatarProfile& profile,
                                                       unsigned bitmap) {
  std::map<std::string, std::string> answers;
  unsigned bit = 0;
  for (const auto& [id, value] : profile.assignments) {
    answers[id] = (bitmap >> bit++) & 1u ? value : "wrong";
  }
  return answers;
}

TEST(VerifyPolicy, Validation) {
  EXPECT_NO_THROW((VerifyPolicy{3, 3, 3}.validate(8)));
  EXPECT_NO_THROW((VerifyPolicy{4, 1, 1}.validate(4)));
  EXPECT_EQ(code_of([] { VerifyPolicy{3, 4, 3}.validate(8); }), ErrorCode::kInvalidPolicy);
  EXPECT_EQ(code_of([] { VerifyPolicy{3, 0, 3}.validate(8); }), ErrorCode::kInvalidPolicy);
  EXPECT_EQ(code_of([] { VerifyPolicy{9, 3, 3}.validate(8); }), ErrorCode::kInvalidPolicy);
  EXPECT_EQ(code_of([] { VerifyPolicy{3, 3, 0}.validate(8); }), ErrorCode::kInvalidPolicy);
}

// judge and verify agree with "popcount(bitmap) >= m" for every k <= 4,
// every m <= k and every correctness bitmap.
TEST(MOfK, MatchesBruteForce) {
  const Timestamp t = at("2026-03-02T10:00:00Z");
  std::size_t cases = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const AvatarProfile profile = small_profile(k);
    for (std::size_t m = 1; m <= k; ++m) {
      const VerifyPolicy policy{k, m, 1000};
      for (unsigned bitmap = 0; bitmap < (1u << k); ++bitmap) {
        const bool oracle = static_cast<std::size_t>(std::popcount(bitmap)) >= m;
        ResetAttempt attempt = attempt_for(profile);
        attempt.submitted = answers_from_bitmap(profile, bitmap);
        EXPECT_EQ(count_correct(attempt, profile),
                  static_cast<std::size_t>(std::popcount(bitmap)));
        EXPECT_EQ(judge(attempt, profile, policy) == ResetOutcome::kGranted, oracle);

        AuthLedger ledger{"p", {}, std::nullopt};
        const ResetAttempt posed = begin_reset(ledger, &profile, policy, bitmap, t);
        EXPECT_EQ(posed.questions.size(), k);
        const auto outcome = verify(ledger, posed.attempt_id,
                                    answers_from_bitmap(profile, bitmap), profile,
                                    policy, t);
        EXPECT_EQ(outcome == ResetOutcome::kGranted, oracle)
            << "k=" << k << " m=" << m << " bitmap=" << bitmap;
        ++cases;
      }
    }
  }
  EXPECT_EQ(cases, 1u * 2 + 2u * 4 + 3u * 8 + 4u * 16);  // sum of k * 2^k
}

// Exact blind-guess pass rate: a guesser who picks uniformly from each pool.
Fraction blind_guess_rate(std::size_t pool_size, std::size_t k, std::size_t m) {
  AvatarProfile profile;
  std::vector<std::string> values;
  for (std::size_t v = 0; v < pool_size; ++v) {
    values.push_back(std::string{static_cast<char>('a' + v / 26),
                                 static_cast<char>('a' + v % 26)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    profile.assignments["q" + std::to_string(i)] = values[(i * 7 + 3) % pool_size];
  }
  const VerifyPolicy policy{k, m, 1};
  std::int64_t granted = 0, total = 0;
  std::vector<std::size_t> guess(k, 0);
  while (true) {
    ResetAttempt attempt = attempt_for(profile);
    for (std::size_t i = 0; i < k; ++i) {
      attempt.submitted["q" + std::to_string(i)] = values[guess[i]];
    }
    if (judge(attempt, profile, policy) == ResetOutcome::kGranted) ++granted;
    ++total;
    std::size_t i = 0;
    while (i < k && ++guess[i] == pool_size) guess[i++] = 0;
    if (i == k) break;
  }
  return Fraction(granted, total);
}

TEST(BlindGuess, FourValuePoolsMatchClosedForm) {
  EXPECT_EQ(blind_guess_rate(4, 3, 3), Fraction(1, 64));
}

TEST(BlindGuess, ThirtyTwoValuePoolsMatchClosedForm) {
  EXPECT_EQ(blind_guess_rate(32, 3, 3), Fraction(1, 32 * 32 * 32));
  // 2-of-3 over 4 values: 3 * (1/4)^2 * (3/4) + (1/4)^3 = 10/64.
  EXPECT_EQ(blind_guess_rate(4, 3, 2), Fraction(10, 64));
}

TEST(BeginReset, AsksKDistinctAttributesOfTheProfile) {
  const AvatarProfile profile = agtest::profile(3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    AuthLedger ledger{"p", {}, std::nullopt};
    const ResetAttempt a = begin_reset(ledger, &profile, VerifyPolicy{}, seed,
                                       at("2026-03-02T10:00:00Z"));
    const std::set<std::string> unique(a.questions.begin(), a.questions.end());
    EXPECT_EQ(unique.size(), 3u);
    for (const auto& q : a.questions) EXPECT_TRUE(profile.assignments.contains(q));
    EXPECT_EQ(a.outcome, ResetOutcome::kPending);
    EXPECT_EQ(ledger.attempts.size(), 1u);
  }
}

TEST(BeginReset, RequiresAProfile) {
  AuthLedger ledger{"p", {}, std::nullopt};
  EXPECT_EQ(code_of([&] {
              begin_reset(ledger, nullptr, VerifyPolicy{}, 1, at("2026-03-02T10:00:00Z"));
            }),
            ErrorCode::kNotEnrolled);
}

TEST(Verify, CorrectAnswersAreGrantedIgnoringCase) {
  const AvatarProfile profile = agtest::profile(3);
  AuthLedger ledger{"p", {}, std::nullopt};
  const Timestamp t = at("2026-03-02T10:00:00Z");
  const ResetAttempt a = begin_reset(ledger, &profile, VerifyPolicy{}, 1, t);
  std::map<std::string, std::string> answers;
  for (const auto& q : a.questions) answers[q] = "  " + profile.value_of(q) + " ";
  for (auto& [q, v] : answers) {
    for (char& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  EXPECT_EQ(verify(ledger, a.attempt_id, answers, profile, VerifyPolicy{}, t),
            ResetOutcome::kGranted);
  EXPECT_EQ(code_of([&] {
              verify(ledger, a.attempt_id, answers, profile, VerifyPolicy{}, t);
            }),
            ErrorCode::kAttemptAlreadyResolved);
}

TEST(Verify, Errors) {
  const AvatarProfile profile = agtest::profile(3);
  AuthLedger ledger{"p", {}, std::nullopt};
  const Timestamp t = at("2026-03-02T10:00:00Z");
  const ResetAttempt a = begin_reset(ledger, &profile, VerifyPolicy{}, 1, t);
  EXPECT_EQ(code_of([&] { verify(ledger, "nope", {}, profile, VerifyPolicy{}, t); }),
            ErrorCode::kUnknownAttempt);
  std::map<std::string, std::string> partial{{a.questions[0], "x"}};
  EXPECT_EQ(code_of([&] { verify(ledger, a.attempt_id, partial, profile, VerifyPolicy{}, t); }),
            ErrorCode::kIncompleteSubmission);
  // An empty answer is a wrong answer, not an incomplete submission.
  std::map<std::string, std::string> blanks;
  for (const auto& q : a.questions) blanks[q] = "";
  EXPECT_EQ(verify(ledger, a.attempt_id, blanks, profile, VerifyPolicy{}, t),
            ResetOutcome::kDenied);
}

TEST(Lockout, ThirdDenialInADayLocksForTwentyFourHours) {
  const AvatarProfile profile = agtest::profile(3);
  AuthLedger ledger{"p", {}, std::nullopt};
  const VerifyPolicy policy;
  Timestamp t = at("2026-03-02T10:00:00Z");
  auto deny = [&](Timestamp when) {
    const ResetAttempt a = begin_reset(ledger, &profile, policy, 1, when);
    std::map<std::string, std::string> wrong;
    for (const auto& q : a.questions) wrong[q] = "x";
    return verify(ledger, a.attempt_id, wrong, profile, policy, when);
  };
  EXPECT_EQ(deny(t), ResetOutcome::kDenied);
  EXPECT_EQ(deny(t + std::chrono::hours{1}), ResetOutcome::kDenied);
  const Timestamp third = t + std::chrono::hours{2};
  EXPECT_EQ(deny(third), ResetOutcome::kLocked);
  EXPECT_TRUE(locked_out(ledger, third + std::chrono::hours{23}));
  EXPECT_EQ(code_of([&] {
              begin_reset(ledger, &profile, policy, 2, third + std::chrono::hours{23});
            }),
            ErrorCode::kLockedOut);
  EXPECT_FALSE(locked_out(ledger, third + std::chrono::hours{24}));
  EXPECT_NO_THROW(begin_reset(ledger, &profile, policy, 2, third + std::chrono::hours{24}));
}

TEST(Lockout, DenialsOutsideTheWindowDoNotCount) {
  const AvatarProfile profile = agtest::profile(3);
  AuthLedger ledger{"p", {}, std::nullopt};
  const VerifyPolicy policy;
  Timestamp t = at("2026-03-02T10:00:00Z");
  for (int i = 0; i < 5; ++i) {
    const ResetAttempt a = begin_reset(ledger, &profile, policy, i, t);
    std::map<std::string, std::string> wrong;
    for (const auto& q : a.questions) wrong[q] = "x";
    EXPECT_EQ(verify(ledger, a.attempt_id, wrong, profile, policy, t),
              ResetOutcome::kDenied);
    t += std::chrono::hours{13};
  }
}

}  // namespace
}  // namespace avatar_game
