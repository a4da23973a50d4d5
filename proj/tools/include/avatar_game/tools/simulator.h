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

#ifndef AVATAR_GAME_TOOLS_SIMULATOR_H_
#define AVATAR_GAME_TOOLS_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/auth.h"
#include "avatar_game/avatar.h"
#include "avatar_game/clock.h"
#include "avatar_game/content.h"
#include "avatar_game/game_events.h"
#include "avatar_game/persuasion.h"
#include "avatar_game/session.h"

namespace avatar_game::sim {

enum class AccuracyModel { kAlwaysCorrect, kFixedP, kDecay };

std::string_view to_string(AccuracyModel model) noexcept;
std::optional<AccuracyModel> accuracy_model_from(std::string_view text) noexcept;

struct SimulationConfig {
  std::uint32_t players = 1;
  std::uint32_t days = 1;
  std::uint32_t sessions_per_day = 1;
  AccuracyModel model = AccuracyModel::kAlwaysCorrect;
  double p = 1.0;       // fixed_p
  double lambda = 0.2;  // decay, per day
  ProgressionPolicy progression;
  VerifyPolicy verify;
  std::uint32_t daily_quota = kDefaultDailyQuota;
  // Answers per session before the simulated player gives up.
  std::uint32_t max_steps = 200;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  Timestamp start = Timestamp{std::chrono::sys_days{std::chrono::year{2026} /
                                                     std::chrono::January / 5} +
                              std::chrono::hours{9}};

  // Throws kInvalidArgument or kInvalidPolicy.
  void validate(const ContentPack& content) const;
};

// One CSV row.
struct DayRow {
  std::uint32_t player = 0;
  std::uint32_t day = 0;
  Date date{};
  std::uint32_t sessions = 0;
  std::uint32_t sessions_completed = 0;
  std::int64_t score = 0;  // sum of final session scores
  std::uint32_t avatar_correct = 0;
  std::uint32_t avatar_wrong = 0;
  std::vector<BadgeKind> badges;
  Phase last_phase = Phase::kRecognition;
  Progression progression = Progression::kStayRecognition;
  bool progression_changed = false;
  bool would_pass_reset = false;

  bool operator==(const DayRow&) const = default;
};

struct PlayerTrace {
  std::uint32_t player = 0;
  AvatarProfile profile;
  std::vector<DayRow> days;
  std::vector<std::vector<GameEvent>> sessions;  // full event logs, in order
};

std::vector<PlayerTrace> simulate(const SimulationConfig& config,
                                  const ContentPack& content);

// Column names with one-line meanings, for --help.
std::string csv_columns_help();
std::string to_csv(std::span<const PlayerTrace> traces);

}  // namespace avatar_game::sim

#endif  // AVATAR_GAME_TOOLS_SIMULATOR_H_
