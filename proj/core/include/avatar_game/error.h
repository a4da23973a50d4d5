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

#ifndef AVATAR_GAME_ERROR_H_
#define AVATAR_GAME_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace avatar_game {

// Stable machine-readable error codes. The names returned by code_name() are
// part of the HTTP contract and must not change.
enum class ErrorCode {
  kUnresolvedPool,
  kEntropyFloor,
  kInvalidPool,
  kInvalidSchema,
  kUnknownAttribute,
  kDistractorCount,
  kEmptyAnswer,
  kAnswerTooLong,
  kUnrepresentableAnswer,
  kMissingProfile,
  kInvalidChallenge,
  kHintInapplicable,
  kInsufficientContent,
  kSessionEnded,
  kNoPendingChallenge,
  kInsufficientPoints,
  kInvalidPhase,
  kInvalidPolicy,
  kNoTemplates,
  kLockedOut,
  kNotEnrolled,
  kUnknownAttempt,
  kAttemptAlreadyResolved,
  kIncompleteSubmission,
  kParseError,
  kValidationError,
  kSequenceGap,
  kStaleChallenge,
  kUnauthorized,
  kInvalidArgument,
  kNotFound,
  kIoError,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace avatar_game

#endif  // AVATAR_GAME_ERROR_H_
