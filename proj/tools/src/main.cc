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

// avatar-game: admin and experimentation front end.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "avatar_game/api/http_server.h"
#include "avatar_game/api/service.h"
#include "avatar_game/content.h"
#include "avatar_game/error.h"
#include "avatar_game/serialization.h"
#include "avatar_game/tools/simulator.h"

namespace {

using avatar_game::ContentPack;
using avatar_game::Error;
using avatar_game::ErrorCode;
using nlohmann::json;

std::shared_ptr<const ContentPack> load_content(const std::string& path) {
  if (path.empty()) {
    return std::make_shared<const ContentPack>(avatar_game::sample_content_pack());
  }
  return std::make_shared<const ContentPack>(avatar_game::load_content_pack(path));
}

int run_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  avatar_game::ContentDocument document;
  try {
    document = avatar_game::parse_content_document(text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto diagnostics = avatar_game::validate_content(document);
  if (diagnostics.empty()) {
    std::cout << "valid: " << document.pack_id << " " << document.version << " ("
              << document.standard_challenges.size() << " standard, "
              << document.avatar_challenges.size() << " avatar challenges)\n";
    return 0;
  }
  for (const auto& d : diagnostics) {
    std::cout << "invalid: " << (d.item.empty() ? "<pack>" : d.item) << ": "
              << d.message << "\n";
  }
  return 1;
}

int run_serve(avatar_game::api::ServiceConfig config) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  avatar_game::api::GameService service(std::move(config));
  avatar_game::api::HttpServer server(service);
  const auto& cfg = service.config();
  if (server.bind(cfg.host, cfg.port) < 0) {
    std::cerr << "error: cannot bind " << cfg.host << ":" << cfg.port << "\n";
    return 1;
  }
  server.start();
  std::cout << "listening on " << cfg.host << ":" << server.port() << std::endl;
  int received = 0;
  sigwait(&signals, &received);
  server.stop();
  return 0;
}

json call(avatar_game::api::GameService& service, const std::string& method,
          const std::string& path, const json& body) {
  avatar_game::api::ApiRequest request{method, path, {}, {}, body.dump()};
  const auto response = service.handle(request);
  std::cout << method << " " << path << " -> " << response.status << "\n"
            << response.body.dump(2) << "\n";
  if (response.status >= 400) {
    throw Error(ErrorCode::kInvalidArgument, "request failed");
  }
  return response.body;
}

int run_reset_demo(avatar_game::api::ServiceConfig config, std::size_t wrong) {
  avatar_game::api::GameService service(std::move(config));
  const json player = call(service, "POST", "/players", {{"reveal_profile", true}});
  const std::string player_id = player.at("player_id");
  const json attempt = call(service, "POST", "/auth/" + player_id + "/reset", {});
  json answers = json::object();
  std::size_t i = 0;
  for (const auto& question : attempt.at("questions")) {
    const std::string id = question.at("attribute_id");
    const std::string value = player.at("profile").at("values").at(id);
    answers[id] = i++ < wrong ? std::string("x") : value;
  }
  const json verdict =
      call(service, "POST",
           "/auth/" + player_id + "/reset/" + attempt.at("attempt_id").get<std::string>() +
               "/verify",
           {{"answers", answers}});
  return verdict.at("outcome") == "granted" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Avatar memorization game: content validation, simulation and service"};
  app.require_subcommand(1);

  // validate
  std::string pack_path;
  auto* validate = app.add_subcommand(
      "validate", "Check a content pack. Exit 0 valid, 1 invalid, 2 unreadable");
  validate->add_option("pack", pack_path, "Content pack JSON")->required();

  // simulate
  avatar_game::sim::SimulationConfig sim;
  std::string model = "always_correct";
  std::string sim_content;
  std::string sim_out;
  auto* simulate = app.add_subcommand(
      "simulate", "Run simulated players and write a per-player-day CSV trace");
  simulate->add_option("--players", sim.players, "Simulated players")
      ->capture_default_str();
  simulate->add_option("--days", sim.days, "Days per player")->capture_default_str();
  simulate->add_option("--sessions-per-day", sim.sessions_per_day, "Sessions per day")
      ->capture_default_str();
  simulate
      ->add_option("--model", model,
                   "Accuracy model: always_correct, fixed_p or decay. decay answers\n"
                   "avatar challenges with p = exp(-lambda * days since the\n"
                   "attribute was last answered correctly) and guesses among the\n"
                   "options otherwise")
      ->check(CLI::IsMember({"always_correct", "fixed_p", "decay"}))
      ->capture_default_str();
  simulate->add_option("--p", sim.p, "Answer accuracy for fixed_p")->capture_default_str();
  simulate->add_option("--lambda", sim.lambda, "Forgetting rate per day for decay")
      ->capture_default_str();
  simulate->add_option("--skill-window", sim.progression.skill_window,
                       "Recognition verdicts in the progression window")
      ->capture_default_str();
  simulate->add_option("--skill-threshold", sim.progression.skill_threshold,
                       "Fraction correct that unlocks recall")
      ->capture_default_str();
  simulate->add_option("--fallback-days", sim.progression.elapsed_days_fallback,
                       "Days after which recall unlocks regardless")
      ->capture_default_str();
  simulate->add_option("--reset-k", sim.verify.k, "Reset questions asked")
      ->capture_default_str();
  simulate->add_option("--reset-m", sim.verify.m, "Correct answers required")
      ->capture_default_str();
  simulate->add_option("--quota", sim.daily_quota, "Daily avatar quota for badges")
      ->capture_default_str();
  simulate->add_option("--max-steps", sim.max_steps,
                       "Answers per session before giving up")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Seed")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
  simulate->add_option("--content", sim_content, "Content pack (default: bundled)");
  simulate->add_option("-o,--out", sim_out, "Write CSV here instead of stdout");
  simulate->footer(avatar_game::sim::csv_columns_help());

  // serve
  std::string serve_host;
  int serve_port = -1;
  std::string serve_data;
  std::string serve_content;
  std::optional<std::uint64_t> serve_seed;
  auto* serve = app.add_subcommand(
      "serve", "Run the JSON API. Flags override AVATAR_GAME_* environment variables");
  serve->add_option("--host", serve_host, "Listen address");
  serve->add_option("--port", serve_port, "Listen port (0 picks one)");
  serve->add_option("--data-dir", serve_data, "Store directory");
  serve->add_option("--content", serve_content, "Content pack (default: bundled)");
  serve->add_option("--seed", serve_seed,
                    "Deterministic ids and tokens; honours X-Test-Now");

  // player create
  std::string player_data = "avatar-game-data";
  std::string player_content;
  bool reveal = false;
  auto* player = app.add_subcommand("player", "Player administration");
  player->require_subcommand(1);
  auto* player_create = player->add_subcommand("create", "Enroll a player");
  player_create->add_option("--data-dir", player_data, "Store directory")
      ->capture_default_str();
  player_create->add_option("--content", player_content, "Content pack");
  player_create->add_flag("--reveal", reveal, "Print the avatar profile values");

  // reset-demo
  std::string demo_data = "avatar-game-demo";
  std::size_t demo_wrong = 0;
  std::uint64_t demo_seed = 1;
  auto* reset_demo = app.add_subcommand(
      "reset-demo", "Enroll a player and walk through a password reset");
  reset_demo->add_option("--data-dir", demo_data, "Store directory")
      ->capture_default_str();
  reset_demo->add_option("--wrong", demo_wrong, "Answers to get wrong")
      ->capture_default_str();
  reset_demo->add_option("--seed", demo_seed, "Seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(pack_path);

    if (*simulate) {
      sim.model = *avatar_game::sim::accuracy_model_from(model);
      const auto content = load_content(sim_content);
      const auto traces = avatar_game::sim::simulate(sim, *content);
      const std::string csv = avatar_game::sim::to_csv(traces);
      if (sim_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream(sim_out, std::ios::binary) << csv;
      }
      return 0;
    }

    if (*serve) {
      auto config = avatar_game::api::ServiceConfig::from_env();
      if (!serve_host.empty()) config.host = serve_host;
      if (serve_port >= 0) config.port = serve_port;
      if (!serve_data.empty()) config.data_dir = serve_data;
      if (!serve_content.empty()) config.content = load_content(serve_content);
      if (serve_seed) config.seed_override = serve_seed;
      return run_serve(std::move(config));
    }

    if (*player_create) {
      avatar_game::api::ServiceConfig config;
      config.data_dir = player_data;
      config.content = load_content(player_content);
      avatar_game::api::GameService service(std::move(config));
      const auto created = service.create_player(avatar_game::system_now());
      json out = {{"player_id", created.record.player_id},
                  {"token", created.token},
                  {"token_expires_at",
                   avatar_game::format_timestamp(created.token_expires_at)},
                  {"profile_id", created.profile.profile_id}};
      if (reveal) out["values"] = created.profile.assignments;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*reset_demo) {
      avatar_game::api::ServiceConfig config;
      config.data_dir = demo_data;
      config.content = load_content("");
      config.seed_override = demo_seed;
      return run_reset_demo(std::move(config), demo_wrong);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << avatar_game::code_name(e.code()) << ": " << e.what()
              << "\n";
    return 2;
  }
  return 0;
}
