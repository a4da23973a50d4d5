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

#include <benchmark/benchmark.h>

#include "avatar_game/avatar.h"
#include "avatar_game/challenge.h"
#include "avatar_game/content.h"
#include "avatar_game/rng.h"
#include "avatar_game/session.h"

namespace avatar_game {
namespace {

const Timestamp kStart = *parse_timestamp("2026-03-02T10:00:00Z");

void BM_LetterPool(benchmark::State& state) {
  const std::string answer(static_cast<std::size_t>(state.range(0)), 'Q');
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_letter_pool(answer, ++seed));
  }
}
BENCHMARK(BM_LetterPool)->Arg(1)->Arg(6)->Arg(12);

void BM_GenerateProfile(benchmark::State& state) {
  const ContentPack& content = sample_content_pack();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_profile(++seed, content.schema()));
  }
}
BENCHMARK(BM_GenerateProfile);

SessionState play_all_correct(const ContentPack& content, const AvatarProfile& profile,
                              std::uint64_t seed) {
  SessionState s = start_session("bench", content, profile, seed, kStart);
  while (s.phase != Phase::kEnded) {
    const std::string answer =
        expected_answer(content.challenge(s.pending->challenge_id), &profile);
    s = submit(s, content, profile, answer, kStart).state;
  }
  return s;
}

void BM_FullSession(benchmark::State& state) {
  const ContentPack& content = sample_content_pack();
  const AvatarProfile profile = generate_profile(7, content.schema());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play_all_correct(content, profile, ++seed));
  }
}
BENCHMARK(BM_FullSession);

void BM_ReplaySession(benchmark::State& state) {
  const ContentPack& content = sample_content_pack();
  const AvatarProfile profile = generate_profile(7, content.schema());
  const SessionState live = play_all_correct(content, profile, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay_session(live.event_log, content, profile));
  }
  state.counters["events"] = static_cast<double>(live.event_log.size());
}
BENCHMARK(BM_ReplaySession);

}  // namespace
}  // namespace avatar_game

BENCHMARK_MAIN();
