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

#include "avatar_game/tools/simulator.h"

#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "avatar_game/error.h"
#include "avatar_game/rng.h"

namespace avatar_game::sim {
namespace {

constexpr std::chrono::seconds kAnswerGap{20};
constexpr std::chrono::hours kSessionGap{2};

using FractionalDays = std::chrono::duration<double, std::ratio<86400>>;

std::string wrong_text(std::string_view expected) {
  return normalize_answer(expected) == "x" ? "y" : "x";
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class SimulatedPlayer {
 public:
  SimulatedPlayer(const SimulationConfig& config, const ContentPack& content,
                  std::uint32_t index)
      : config_(config),
        content_(content),
        seed_(derive_seed(config.seed, index)),
        rng_(derive_seed(seed_, "answers")) {
    trace_.player = index;
    trace_.profile =
        generate_profile(derive_seed(seed_, "profile"), content.schema(), config.start);
    player_id_ = "sim-" + std::to_string(index);
    for (const auto& attr : content.schema().attributes()) {
      rehearsed_at_[attr.attribute_id] = config.start;
    }
  }

  PlayerTrace run() {
    Progression previous = Progression::kStayRecognition;
    for (std::uint32_t day = 0; day < config_.days; ++day) {
      DayRow row = play_day(day);
      row.progression_changed = row.progression != previous;
      previous = row.progression;
      trace_.days.push_back(std::move(row));
    }
    return std::move(trace_);
  }

 private:
  // Chance of remembering an attribute at `now`.
  double recall_probability(const std::string& attribute_id, Timestamp now) const {
    switch (config_.model) {
      case AccuracyModel::kAlwaysCorrect:
        return 1.0;
      case AccuracyModel::kFixedP:
        return config_.p;
      case AccuracyModel::kDecay: {
        const double elapsed =
            FractionalDays(now - rehearsed_at_.at(attribute_id)).count();
        return std::exp(-config_.lambda * elapsed);
      }
    }
    return 0.0;
  }

  std::string choose_submission(const PendingChallenge& pending, Timestamp now) {
    const Challenge challenge = content_.challenge(pending.challenge_id);
    const std::string expected = expected_answer(challenge, &trace_.profile);
    if (pending.kind == ChallengeKind::kStandard) {
      // Word puzzles do not depend on memory; only fixed_p makes them fail.
      const double p = config_.model == AccuracyModel::kFixedP ? config_.p : 1.0;
      return rng_.bernoulli(p) ? expected : wrong_text(expected);
    }
    const auto& attribute_id = std::get<AvatarChallenge>(challenge).attribute_id;
    if (rng_.bernoulli(recall_probability(attribute_id, now))) return expected;
    if (pending.kind == ChallengeKind::kRecognition &&
        config_.model == AccuracyModel::kDecay && pending.view.options &&
        !pending.view.options->empty()) {
      // A forgotten value is guessed among the options.
      const auto& options = *pending.view.options;
      return options[rng_.below(options.size())];
    }
    if (pending.kind == ChallengeKind::kRecognition && pending.view.options) {
      for (const auto& option : *pending.view.options) {
        if (normalize_answer(option) != normalize_answer(expected)) return option;
      }
    }
    return wrong_text(expected);
  }

  DayRow play_day(std::uint32_t day) {
    DayRow row;
    row.player = trace_.player;
    row.day = day;
    Timestamp now = config_.start + std::chrono::hours{24} * day;
    row.date = date_of(now);
    std::uint32_t solved_today = 0;
    std::vector<BadgeKind> badges_today;

    for (std::uint32_t s = 0; s < config_.sessions_per_day; ++s) {
      SessionOptions options;
      options.session_id = player_id_ + "-d" + std::to_string(day) + "-s" +
                           std::to_string(s);
      options.daily_quota = config_.daily_quota;
      options.avatar_solved_today = solved_today;
      options.badges_today = badges_today;
      SessionState state =
          start_session(player_id_, content_, trace_.profile,
                        derive_seed(seed_, std::uint64_t{day} * 1000 + s), now, options);
      for (std::uint32_t step = 0;
           state.phase != Phase::kEnded && step < config_.max_steps; ++step) {
        const std::string submission = choose_submission(*state.pending, now);
        now += kAnswerGap;
        SubmitResult result = submit(state, content_, trace_.profile, submission, now);
        tally(result, now, row);
        state = std::move(result.state);
      }
      ++row.sessions;
      if (state.phase == Phase::kEnded) ++row.sessions_completed;
      row.score += state.score;
      row.last_phase = state.phase;
      solved_today = state.avatar_solved_today;
      badges_today = state.badges_today;
      trace_.sessions.push_back(std::move(state.event_log));
      now += kSessionGap;
    }
    row.progression = progression_decision(history_, config_.progression, now);
    row.would_pass_reset = attempt_reset(day, now);
    return row;
  }

  void tally(const SubmitResult& result, Timestamp now, DayRow& row) {
    for (const auto& event : result.events) {
      if (const auto* badge = event.as<BadgeAwarded>()) {
        row.badges.push_back(badge->badge);
      }
      const auto* answered = event.as<ChallengeAnswered>();
      if (answered == nullptr || answered->kind == ChallengeKind::kStandard) continue;
      (answered->correct ? row.avatar_correct : row.avatar_wrong) += 1;
      if (answered->kind == ChallengeKind::kRecognition) {
        history_.push_back({date_of(now), answered->correct});
      }
      if (answered->correct) {
        const auto* avatar = content_.find_avatar(answered->challenge_id);
        rehearsed_at_[avatar->attribute_id] = now;
      }
    }
  }

  // A fresh reset attempt at the end of the day, answered from memory.
  bool attempt_reset(std::uint32_t day, Timestamp now) {
    AuthLedger ledger{player_id_, {}, std::nullopt};
    ResetAttempt attempt =
        begin_reset(ledger, &trace_.profile, config_.verify,
                    derive_seed(derive_seed(seed_, "reset"), day), now);
    for (const auto& attribute_id : attempt.questions) {
      const std::string& value = trace_.profile.value_of(attribute_id);
      attempt.submitted[attribute_id] =
          rng_.bernoulli(recall_probability(attribute_id, now)) ? value
                                                                : wrong_text(value);
    }
    return judge(attempt, trace_.profile, config_.verify) == ResetOutcome::kGranted;
  }

  const SimulationConfig& config_;
  const ContentPack& content_;
  std::uint64_t seed_;
  Rng rng_;
  std::string player_id_;
  PlayerTrace trace_;
  std::map<std::string, Timestamp, std::less<>> rehearsed_at_;
  std::vector<DatedVerdict> history_;
};

}  // namespace

std::string_view to_string(AccuracyModel model) noexcept {
  switch (model) {
    case AccuracyModel::kAlwaysCorrect:
      return "always_correct";
    case AccuracyModel::kFixedP:
      return "fixed_p";
    case AccuracyModel::kDecay:
      return "decay";
  }
  return "";
}

std::optional<AccuracyModel> accuracy_model_from(std::string_view text) noexcept {
  for (auto model : {AccuracyModel::kAlwaysCorrect, AccuracyModel::kFixedP,
                     AccuracyModel::kDecay}) {
    if (to_string(model) == text) return model;
  }
  return std::nullopt;
}

void SimulationConfig::validate(const ContentPack& content) const {
  if (players < 1 || days < 1 || sessions_per_day < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "players, days and sessions per day must be at least 1");
  }
  if (max_steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max steps must be at least 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be finite and >= 0");
  }
  if (daily_quota < 2) {
    throw Error(ErrorCode::kInvalidArgument, "daily quota must be at least 2");
  }
  progression.validate();
  verify.validate(content.schema().attributes().size());
}

std::vector<PlayerTrace> simulate(const SimulationConfig& config,
                                  const ContentPack& content) {
  config.validate(content);
  std::vector<PlayerTrace> traces(config.players);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t i = next++; i < config.players; i = next++) {
      traces[i] = SimulatedPlayer(config, content, i).run();
    }
  };
  const unsigned threads = std::max(1u, std::min(config.threads, config.players));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();
  return traces;
}

std::string csv_columns_help() {
  return "CSV columns (one row per player-day, header row first):\n"
         "  player              simulated player index, 0-based\n"
         "  day                 day index, 0-based\n"
         "  date                calendar date (UTC)\n"
         "  sessions            sessions started that day\n"
         "  sessions_completed  sessions that reached the end\n"
         "  score               sum of the day's final session scores\n"
         "  avatar_correct      correct avatar answers\n"
         "  avatar_wrong        wrong avatar answers\n"
         "  badges              badges earned, ';'-separated in award order\n"
         "  trophy              1 if a trophy was earned that day\n"
         "  phase               phase of the day's last session when it stopped\n"
         "  progression         stay_recognition or advance_recall after the day\n"
         "  progression_changed 1 on the day the progression decision flipped\n"
         "  would_pass_reset    1 if an end-of-day reset attempt answered from\n"
         "                      memory would be granted\n";
}

std::string to_csv(std::span<const PlayerTrace> traces) {
  std::ostringstream out;
  out << "player,day,date,sessions,sessions_completed,score,avatar_correct,"
         "avatar_wrong,badges,trophy,phase,progression,progression_changed,"
         "would_pass_reset\r\n";
  for (const auto& trace : traces) {
    for (const auto& row : trace.days) {
      std::string badges;
      bool trophy = false;
      for (BadgeKind badge : row.badges) {
        if (!badges.empty()) badges += ';';
        badges += to_string(badge);
        trophy = trophy || badge == BadgeKind::kTrophy;
      }
      out << row.player << ',' << row.day << ',' << format_date(row.date) << ','
          << row.sessions << ',' << row.sessions_completed << ',' << row.score << ','
          << row.avatar_correct << ',' << row.avatar_wrong << ',' << csv_field(badges)
          << ',' << (trophy ? 1 : 0) << ',' << to_string(row.last_phase) << ','
          << to_string(row.progression) << ',' << (row.progression_changed ? 1 : 0)
          << ',' << (row.would_pass_reset ? 1 : 0) << "\r\n";
    }
  }
  return out.str();
}

}  // namespace avatar_game::sim
