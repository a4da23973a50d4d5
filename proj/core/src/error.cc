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

#include "avatar_game/error.h"

namespace avatar_game {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnresolvedPool: return "UnresolvedPool";
    case ErrorCode::kEntropyFloor: return "EntropyFloor";
    case ErrorCode::kInvalidPool: return "InvalidPool";
    case ErrorCode::kInvalidSchema: return "InvalidSchema";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kDistractorCount: return "DistractorCount";
    case ErrorCode::kEmptyAnswer: return "EmptyAnswer";
    case ErrorCode::kAnswerTooLong: return "AnswerTooLong";
    case ErrorCode::kUnrepresentableAnswer: return "UnrepresentableAnswer";
    case ErrorCode::kMissingProfile: return "MissingProfile";
    case ErrorCode::kInvalidChallenge: return "InvalidChallenge";
    case ErrorCode::kHintInapplicable: return "HintInapplicable";
    case ErrorCode::kInsufficientContent: return "InsufficientContent";
    case ErrorCode::kSessionEnded: return "SessionEnded";
    case ErrorCode::kNoPendingChallenge: return "NoPendingChallenge";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
    case ErrorCode::kInvalidPhase: return "InvalidPhase";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kNoTemplates: return "NoTemplates";
    case ErrorCode::kLockedOut: return "LockedOut";
    case ErrorCode::kNotEnrolled: return "NotEnrolled";
    case ErrorCode::kUnknownAttempt: return "UnknownAttempt";
    case ErrorCode::kAttemptAlreadyResolved: return "AttemptAlreadyResolved";
    case ErrorCode::kIncompleteSubmission: return "IncompleteSubmission";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kSequenceGap: return "SequenceGap";
    case ErrorCode::kStaleChallenge: return "StaleChallenge";
    case ErrorCode::kUnauthorized: return "Unauthorized";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace avatar_game
