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

#ifndef AVATAR_GAME_SERIALIZATION_H_
#define AVATAR_GAME_SERIALIZATION_H_

// JSON mappings for the domain types. Field names here are the on-disk and
// wire names.

#include <nlohmann/json.hpp>

#include "avatar_game/auth.h"
#include "avatar_game/avatar.h"
#include "avatar_game/challenge.h"
#include "avatar_game/content.h"
#include "avatar_game/game_events.h"
#include "avatar_game/persuasion.h"
#include "avatar_game/session.h"
#include "avatar_game/store.h"

namespace avatar_game {

using nlohmann::json;

void to_json(json& j, const AttributeDescriptor& v);
void from_json(const json& j, AttributeDescriptor& v);
void to_json(json& j, const ValuePool& v);
void from_json(const json& j, ValuePool& v);
void to_json(json& j, const AvatarProfile& v);
void from_json(const json& j, AvatarProfile& v);

void to_json(json& j, const StandardChallenge& v);
void from_json(const json& j, StandardChallenge& v);
void to_json(json& j, const AvatarChallenge& v);
void from_json(const json& j, AvatarChallenge& v);
void to_json(json& j, const LetterPool& v);
void from_json(const json& j, LetterPool& v);
void to_json(json& j, const ChallengeView& v);
void from_json(const json& j, ChallengeView& v);

// The player-facing rendering of a view: cue texts only once unlocked, the
// `length` field only when show_length is set.
json client_view(const ChallengeView& view);

void to_json(json& j, const Badge& v);
void from_json(const json& j, Badge& v);
void to_json(json& j, const GameEvent& v);
void from_json(const json& j, GameEvent& v);
void to_json(json& j, const PendingChallenge& v);
void from_json(const json& j, PendingChallenge& v);
void to_json(json& j, const SessionState& v);
void from_json(const json& j, SessionState& v);

void to_json(json& j, const ActivityLog& v);
void from_json(const json& j, ActivityLog& v);
void to_json(json& j, const DatedVerdict& v);
void from_json(const json& j, DatedVerdict& v);
void to_json(json& j, const StatsReport& v);
void to_json(json& j, const MessageCatalog& v);
void from_json(const json& j, MessageCatalog& v);

void to_json(json& j, const ResetAttempt& v);
void from_json(const json& j, ResetAttempt& v);
void to_json(json& j, const AuthLedger& v);
void from_json(const json& j, AuthLedger& v);

void to_json(json& j, const PlayerRecord& v);
void from_json(const json& j, PlayerRecord& v);

void to_json(json& j, const ContentDocument& v);
void from_json(const json& j, ContentDocument& v);

}  // namespace avatar_game

#endif  // AVATAR_GAME_SERIALIZATION_H_
