// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matroid-arena: command-line front end.
//
// Machine-readable JSON goes to stdout, human-readable notes to stderr.
// Exit codes: 0 success, 1 infeasible or Bob wins, 2 input error,
// 3 internal assertion.

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "matroid_arena/alice.h"
#include "matroid_arena/errors.h"
#include "matroid_arena/exchange.h"
#include "matroid_arena/game.h"
#include "matroid_arena/json_io.h"
#include "matroid_arena/service.h"
#include "matroid_arena/union.h"

namespace marena {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExhaustiveExchangeLimit = 7;

struct Inputs {
  std::string matroid;
  std::string weights;
  std::string lists;
  std::optional<int> k;
};

void Emit(const Json& j) { std::cout << j.dump() << "\n"; }

Matroid LoadMatroidFile(const std::string& path) {
  return LoadMatroid(MatroidSpecFromJson(ReadJsonFile(path)));
}

Weighting WeightsOrOnes(const Inputs& in, const Matroid& m) {
  if (in.weights.empty()) return Weighting(m.size(), 1);
  return WeightingFromJson(ReadJsonFile(in.weights));
}

ListSizes ListsOrK(const Inputs& in, const Matroid& m) {
  if (!in.lists.empty()) return ListSizesFromJson(ReadJsonFile(in.lists));
  if (in.k) return ListSizes(m.size(), *in.k);
  throw ArenaError(ErrorCode::kSpecInvalid, "need --lists or --k");
}

int Chroma(const Inputs& in) {
  const Matroid m = LoadMatroidFile(in.matroid);
  const ChromaticResult result = ChromaticNumber(m);
  spdlog::info("chromatic number {}", result.colors);
  Emit(Json{{"chromaticNumber", result.colors},
            {"cover", CoverToJson(result.cover)}});
  return kExitOk;
}

int WCover(const Inputs& in) {
  const Matroid m = LoadMatroidFile(in.matroid);
  const CoverOrWitness result =
      CheckCanonicalColorable(m, WeightsOrOnes(in, m), ListsOrK(in, m));
  if (const auto* cover = std::get_if<Cover>(&result)) {
    Emit(CoverToJson(*cover));
    return kExitOk;
  }
  const auto& witness = std::get<DeficiencyWitness>(result);
  spdlog::info("infeasible: demand {} > supply {}", witness.demand,
               witness.supply);
  Emit(Json{{"witness", WitnessToJson(witness)}});
  return kExitNegative;
}

int PlayCommand(const Inputs& in, const std::string& bob,
                std::optional<std::uint64_t> seed, const std::string& out) {
  const Matroid m = LoadMatroidFile(in.matroid);
  GameConfig config;
  config.matroid = *m.spec();
  config.w = WeightsOrOnes(in, m);
  config.l = ListsOrK(in, m);
  config.bob = bob;
  config.seed = seed;
  const Transcript transcript = Play(config);
  const Json j = TranscriptToJson(transcript);
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) {
      throw ArenaError(ErrorCode::kSpecInvalid, "cannot write " + out);
    }
    file << j.dump(2) << "\n";
  }
  Emit(j);
  spdlog::info("{} wins after {} rounds", PlayerName(*transcript.result),
               transcript.rounds.size());
  return transcript.result == Player::kAlice ? kExitOk : kExitNegative;
}

int VerifyCommand(const Inputs& in, const std::string& mode, bool capped,
                  bool symmetry) {
  const Matroid m = LoadMatroidFile(in.matroid);
  const Weighting w = WeightsOrOnes(in, m);
  const ListSizes l = ListsOrK(in, m);
  VerifyOptions options;
  options.universe = capped ? MoveUniverse::kCapped : MoveUniverse::kFull;
  options.symmetry = symmetry;
  Verdict verdict;
  if (mode == "exhaustive") {
    try {
      verdict = VerifyAliceWins(m, w, l, options);
    } catch (const NotColorableError& e) {
      spdlog::info("canonical lists fail; Alice has no winning strategy");
      Emit(Json{{"winner", "bob"}, {"witness", WitnessToJson(e.witness())}});
      return kExitNegative;
    }
  } else {
    verdict = FindBobWin(m, w, l, options);
  }
  spdlog::info("{} wins; {} states explored", PlayerName(verdict.winner),
               verdict.states_explored);
  Emit(VerdictToJson(verdict));
  return verdict.winner == Player::kAlice ? kExitOk : kExitNegative;
}

// Checks the constructive exchange against exhaustive enumeration.
int ExchangeCheck(const Inputs& in, int samples, std::uint64_t seed,
                  bool exhaustive) {
  const Matroid m = LoadMatroidFile(in.matroid);
  std::uint64_t cases = 0;
  std::uint64_t failed = 0;
  auto check = [&](ElementSet i1, ElementSet i2, ElementSet x) {
    ++cases;
    const ExchangeRequest request{i1, i2, x};
    bool ok = false;
    try {
      const auto valid = BruteForceExchange(m, request);
      const ElementSet y = ExchangeSubsets(m, request);
      ok = !valid.empty() &&
           std::find(valid.begin(), valid.end(), y) != valid.end();
    } catch (const ArenaError& e) {
      if (e.code() != ErrorCode::kInternalInfeasible) throw;
    }
    if (!ok) {
      ++failed;
      spdlog::error("exchange failed for I1={} I2={} X={}", i1.ToString(),
                    i2.ToString(), x.ToString());
    }
  };
  if (exhaustive) {
    if (m.size() > kExhaustiveExchangeLimit) {
      throw ArenaError(ErrorCode::kTooLarge,
                       "exhaustive exchange check needs n <= 7");
    }
    std::vector<ElementSet> independent;
    ForEachSubset(m.ground(), [&](ElementSet s) {
      if (m.IsIndependent(s)) independent.push_back(s);
    });
    for (ElementSet i1 : independent) {
      for (ElementSet i2 : independent) {
        ForEachSubset(i1, [&](ElementSet x) { check(i1, i2, x); });
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    const std::uint64_t ground = m.ground().bits();
    for (int s = 0; s < samples; ++s) {
      const ElementSet i1 = m.MaximalIndependentSubset(ElementSet(rng() & ground));
      const ElementSet i2 = m.MaximalIndependentSubset(ElementSet(rng() & ground));
      check(i1, i2, ElementSet(rng() & i1.bits()));
    }
  }
  Emit(Json{{"cases", cases}, {"passed", cases - failed}, {"failed", failed}});
  return failed == 0 ? kExitOk : kExitInternal;
}

int ListColor(const Inputs& in) {
  const Matroid m = LoadMatroidFile(in.matroid);
  const ColorLists lists = ColorListsFromJson(ReadJsonFile(in.lists));
  try {
    Emit(ColoringToJson(OfflineListColor(m, WeightsOrOnes(in, m), lists)));
  } catch (const NotColorableError& e) {
    spdlog::info("{}", e.what());
    Emit(Json{{"witness", WitnessToJson(e.witness())}});
    return kExitNegative;
  }
  return kExitOk;
}

Server* g_server = nullptr;

void StopServer(int) {
  if (g_server != nullptr) g_server->Stop();
}

int Serve(int port, const std::string& state_dir) {
  SessionStore store(state_dir.empty()
                         ? std::nullopt
                         : std::optional<std::filesystem::path>(state_dir));
  Server server(store);
  if (!server.Bind("0.0.0.0", port)) {
    spdlog::error("cannot bind port {}", port);
    return kExitInput;
  }
  g_server = &server;
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  spdlog::info("listening on port {}", port);
  server.Serve();
  g_server = nullptr;
  return kExitOk;
}

void ConfigureLogging() {
  auto logger = spdlog::stderr_color_mt("matroid-arena");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  if (const char* level = std::getenv("MATROID_ARENA_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  } else {
    spdlog::set_level(spdlog::level::info);
  }
}

int Main(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"On-line list coloring of matroids"};
  app.require_subcommand(1);

  Inputs in;
  auto add_matroid = [&in](CLI::App* cmd) {
    cmd->add_option("--matroid", in.matroid, "matroid JSON file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_weights_lists = [&in](CLI::App* cmd) {
    cmd->add_option("--weights", in.weights, "{\"w\":[...]} file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--lists", in.lists, "{\"l\":[...]} file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--k", in.k, "constant list size");
  };

  auto* chroma = app.add_subcommand("chroma", "chromatic number and cover");
  add_matroid(chroma);

  auto* wcover = app.add_subcommand("wcover", "w-cover from canonical lists");
  add_matroid(wcover);
  add_weights_lists(wcover);

  std::string bob = "full";
  std::optional<std::uint64_t> seed;
  std::string out;
  auto* play = app.add_subcommand("play", "engine Alice against a built-in Bob");
  add_matroid(play);
  add_weights_lists(play);
  play->add_option("--bob", bob, "full | random | singletons | tight");
  play->add_option("--seed", seed, "seed for random Bob");
  play->add_option("--out", out, "transcript output file");

  std::string mode = "exhaustive";
  bool capped = false;
  bool symmetry = false;
  auto* verify = app.add_subcommand("verify", "exhaustive game verification");
  add_matroid(verify);
  add_weights_lists(verify);
  verify->add_option("--mode", mode)
      ->check(CLI::IsMember({"exhaustive", "minimax"}));
  verify->add_flag("--capped", capped, "restrict Bob to small moves");
  verify->add_flag("--symmetry", symmetry,
                   "symmetry reduction for uniform matroids (minimax)");

  int samples = 0;
  std::uint64_t exchange_seed = 1;
  bool exhaustive = false;
  auto* exchange =
      app.add_subcommand("exchange-check", "subset exchange against brute force");
  add_matroid(exchange);
  exchange->add_option("--samples", samples);
  exchange->add_option("--seed", exchange_seed);
  exchange->add_flag("--exhaustive", exhaustive);

  auto* list_color =
      app.add_subcommand("list-color", "off-line coloring from explicit lists");
  add_matroid(list_color);
  list_color->add_option("--lists", in.lists, "{\"lists\":[[...]]} file")
      ->required()
      ->check(CLI::ExistingFile);
  list_color->add_option("--weights", in.weights)->check(CLI::ExistingFile);

  int port = 8080;
  std::string state_dir;
  auto* serve = app.add_subcommand("serve", "run the session service");
  serve->add_option("--port", port);
  serve->add_option("--state-dir", state_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (chroma->parsed()) return Chroma(in);
    if (wcover->parsed()) return WCover(in);
    if (play->parsed()) return PlayCommand(in, bob, seed, out);
    if (verify->parsed()) return VerifyCommand(in, mode, capped, symmetry);
    if (exchange->parsed()) {
      return ExchangeCheck(in, samples, exchange_seed, exhaustive);
    }
    if (list_color->parsed()) return ListColor(in);
    if (serve->parsed()) return Serve(port, state_dir);
  } catch (const ArenaError& e) {
    spdlog::error("{}: {}", e.name(), e.what());
    return e.code() == ErrorCode::kInternalInfeasible ? kExitInternal
                                                      : kExitInput;
  }
  return kExitInput;
}

}  // namespace
}  // namespace marena

int main(int argc, char** argv) { return marena::Main(argc, argv); }
