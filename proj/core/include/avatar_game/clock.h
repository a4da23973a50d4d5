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

#ifndef AVATAR_GAME_CLOCK_H_
#define AVATAR_GAME_CLOCK_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace avatar_game {

// All game time is UTC with one-second resolution. Nothing in the engine reads
// a clock; callers inject timestamps.
using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

inline Date date_of(Timestamp t) {
  return std::chrono::floor<std::chrono::days>(t);
}

// Whole calendar days from `from` to `to` (negative if `to` is earlier).
inline long days_between(Date from, Date to) {
  return static_cast<long>((to - from).count());
}

// "2026-10-16T07:30:00Z"
std::string format_timestamp(Timestamp t);
// "2026-10-16"
std::string format_date(Date d);

std::optional<Timestamp> parse_timestamp(std::string_view text);
std::optional<Date> parse_date(std::string_view text);

Timestamp system_now();

}  // namespace avatar_game

#endif  // AVATAR_GAME_CLOCK_H_
