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

#include "avatar_game/game_events.h"

namespace avatar_game {

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::kRecognition: return "recognition_phase";
    case Phase::kRecall: return "recall_phase";
    case Phase::kEnded: return "ended";
  }
  return "ended";
}

std::string_view to_string(BadgeKind kind) noexcept {
  switch (kind) {
    case BadgeKind::kSmiley: return "smiley";
    case BadgeKind::kCake: return "cake";
    case BadgeKind::kTrophy: return "trophy";
  }
  return "smiley";
}

std::string_view to_string(Milestone milestone) noexcept {
  return milestone == Milestone::kRecognitionComplete ? "recognition_complete"
                                                      : "recall_complete";
}

std::optional<Phase> phase_from(std::string_view text) noexcept {
  if (text == "recognition_phase") return Phase::kRecognition;
  if (text == "recall_phase") return Phase::kRecall;
  if (text == "ended") return Phase::kEnded;
  return std::nullopt;
}

std::optional<BadgeKind> badge_kind_from(std::string_view text) noexcept {
  if (text == "smiley") return BadgeKind::kSmiley;
  if (text == "cake") return BadgeKind::kCake;
  if (text == "trophy") return BadgeKind::kTrophy;
  return std::nullopt;
}

std::optional<Milestone> milestone_from(std::string_view text) noexcept {
  if (text == "recognition_complete") return Milestone::kRecognitionComplete;
  if (text == "recall_complete") return Milestone::kRecallComplete;
  return std::nullopt;
}

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::kSessionStart: return "session_start";
    case EventKind::kPresented: return "presented";
    case EventKind::kAnswered: return "answered";
    case EventKind::kHintBought: return "hint_bought";
    case EventKind::kFreeHint: return "free_hint";
    case EventKind::kBadge: return "badge";
    case EventKind::kMilestone: return "milestone";
    case EventKind::kSessionEnd: return "session_end";
  }
  return "session_start";
}

EventKind GameEvent::kind() const noexcept {
  // Variant alternatives are declared in EventKind order.
  return static_cast<EventKind>(payload.index());
}

}  // namespace avatar_game
