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

#include "matroid_arena/service.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "matroid_arena/alice.h"
#include "matroid_arena/errors.h"
#include "matroid_arena/game.h"

namespace marena {

struct Session {
  Session(std::string session_id, GameConfig game, Referee start)
      : id(std::move(session_id)),
        config(std::move(game)),
        referee(std::move(start)) {}

  std::string id;
  GameConfig config;
  Referee referee;
  std::optional<AliceState> alice;  // engine Alice only
  std::unique_ptr<BobStrategy> bob;  // engine Bob only
  std::vector<Round> rounds;
  std::string created_at;
  std::string updated_at;
  mutable std::mutex mu;

  bool HumanAlice() const { return config.alice == kHuman; }
  bool HumanBob() const { return config.bob == kHuman; }
};

namespace {

HttpReply Error(int status, std::string_view code, const std::string& reason) {
  return {status, Json{{"error", code}, {"reason", reason}}};
}

HttpReply FromError(const ArenaError& e) {
  switch (e.code()) {
    case ErrorCode::kIllegalMove:
    case ErrorCode::kWrongPhase:
    case ErrorCode::kNotColorable:
      return Error(409, e.name(), e.what());
    case ErrorCode::kInternalInfeasible:
      return Error(500, e.name(), e.what());
    default:
      return Error(400, e.name(), e.what());
  }
}

HttpReply NotFound(const std::string& id) {
  return Error(404, "NotFound", "no session '" + id + "'");
}

std::string NowIso8601() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string NewSessionId() {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  std::string id;
  for (int i = 0; i < 16; ++i) id.push_back(kAlphabet[rng() % 64]);
  return id;
}

std::optional<Player> Turn(const Session& s) {
  switch (s.referee.state().phase) {
    case Phase::kAwaitingBob:
      return Player::kBob;
    case Phase::kAwaitingAlice:
      return Player::kAlice;
    case Phase::kFinished:
      return std::nullopt;
  }
  return std::nullopt;
}

Json PublicState(const Session& s, bool debug) {
  const GameState& state = s.referee.state();
  const std::optional<Player> turn = Turn(s);
  const std::optional<Player> winner = s.referee.Winner();
  Json j{{"id", s.id},
         {"config", GameConfigToJson(s.config)},
         {"phase", PhaseName(state.phase)},
         {"round", state.round},
         {"turn", turn ? Json(PlayerName(*turn)) : Json(nullptr)},
         {"lists", state.lists},
         {"assigned", state.assigned},
         {"pending", ElementSetToJson(state.pending)},
         {"result", winner ? Json(PlayerName(*winner)) : Json(nullptr)},
         {"transcript",
          Json{{"rounds", RoundsToJson(s.rounds)},
               {"result", winner ? Json(PlayerName(*winner)) : Json(nullptr)}}},
         {"createdAt", s.created_at},
         {"updatedAt", s.updated_at}};
  if (debug && s.alice) j["cover"] = CoverToJson(s.alice->cover);
  return j;
}

// Alice's reply to the pending move by a freshly started strategy for the
// current residual game; falls back to greedy when that game is lost.
ElementSet AliceHint(const Referee& referee) {
  const ElementSet pending = referee.state().pending;
  ListSizes before = referee.ResidualLists();
  for (int e : pending) ++before[e];
  try {
    const AliceState fresh =
        InitAlice(referee.matroid(), referee.ResidualWeights(), before);
    return Respond(fresh, pending).colored;
  } catch (const NotColorableError&) {
    return GreedyAliceMove(referee);
  }
}

// Applies Alice's move on copies and commits both only on success.
void CommitAlice(Session& s, Referee& referee, std::optional<AliceState>& alice,
                 ElementSet a) {
  const int color = referee.state().round;
  const ElementSet v = referee.state().pending;
  referee.ApplyAlice(a);
  s.rounds.push_back({color, v, a});
  s.referee = std::move(referee);
  s.alice = std::move(alice);
}

// Lets engine players move until a human is to play or the game ends.
void RunEngines(Session& s) {
  while (true) {
    const Phase phase = s.referee.state().phase;
    if (phase == Phase::kAwaitingBob && !s.HumanBob()) {
      s.referee.ApplyBob(s.bob->NextMove(s.referee));
    } else if (phase == Phase::kAwaitingAlice && !s.HumanAlice()) {
      Referee referee = s.referee;
      std::optional<AliceState> alice;
      ElementSet a;
      if (s.alice) {
        Response response = Respond(*s.alice, referee.state().pending);
        a = response.colored;
        alice = std::move(response.next);
      } else {
        a = GreedyAliceMove(referee);
      }
      CommitAlice(s, referee, alice, a);
    } else {
      return;
    }
  }
}

std::unique_ptr<Session> BuildSession(std::string id, GameConfig config) {
  if (config.alice != kEngine && config.alice != kHuman) {
    throw ArenaError(ErrorCode::kSpecInvalid,
                     "alice must be \"engine\" or \"human\"");
  }
  Matroid m = LoadMatroid(config.matroid);
  Referee referee(m, config.w, config.l);
  auto session =
      std::make_unique<Session>(std::move(id), config, std::move(referee));
  session->created_at = NowIso8601();
  session->updated_at = session->created_at;
  if (!session->HumanBob()) session->bob = MakeBob(config.bob, config.seed);
  if (!session->HumanAlice()) {
    session->alice = InitAlice(m, config.w, config.l);
  }
  return session;
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir)
    : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::filesystem::create_directories(*state_dir_);
    LoadSnapshots();
  }
}

SessionStore::~SessionStore() = default;

std::size_t SessionStore::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

std::shared_ptr<Session> SessionStore::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpReply SessionStore::Create(const std::string& body) {
  std::shared_ptr<Session> session;
  try {
    session = BuildSession(NewSessionId(), GameConfigFromJson(ParseJson(body)));
    RunEngines(*session);
  } catch (const NotColorableError& e) {
    HttpReply reply = Error(409, e.name(), e.what());
    reply.body["witness"] = WitnessToJson(e.witness());
    return reply;
  } catch (const ArenaError& e) {
    return FromError(e);
  }
  {
    std::unique_lock lock(mu_);
    sessions_[session->id] = session;
  }
  std::lock_guard session_lock(session->mu);
  Snapshot(*session);
  spdlog::info("session {} created", session->id);
  return {201, PublicState(*session, false)};
}

HttpReply SessionStore::List() const {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::shared_lock lock(mu_);
    for (const auto& [id, session] : sessions_) all.push_back(session);
  }
  Json out = Json::array();
  for (const auto& session : all) {
    std::lock_guard lock(session->mu);
    const auto winner = session->referee.Winner();
    out.push_back(Json{{"id", session->id},
                       {"phase", PhaseName(session->referee.state().phase)},
                       {"round", session->referee.state().round},
                       {"result", winner ? Json(PlayerName(*winner))
                                         : Json(nullptr)},
                       {"createdAt", session->created_at},
                       {"updatedAt", session->updated_at}});
  }
  return {200, out};
}

HttpReply SessionStore::Get(const std::string& id, bool debug) const {
  auto session = Find(id);
  if (!session) return NotFound(id);
  std::lock_guard lock(session->mu);
  return {200, PublicState(*session, debug)};
}

HttpReply SessionStore::Delete(const std::string& id) {
  std::shared_ptr<Session> session;
  {
    std::unique_lock lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return NotFound(id);
    session = it->second;
    sessions_.erase(it);
  }
  std::lock_guard lock(session->mu);
  if (state_dir_) {
    std::error_code ignored;
    std::filesystem::remove(*state_dir_ / (id + ".json"), ignored);
  }
  return {200, Json{{"deleted", id}}};
}

HttpReply SessionStore::BobMove(const std::string& id,
                                const std::string& body) {
  auto session = Find(id);
  if (!session) return NotFound(id);
  std::lock_guard lock(session->mu);
  Session& s = *session;
  try {
    const Json request = ParseJson(body);
    if (!request.is_object() || !request.contains("V")) {
      return Error(400, "SpecInvalid", "body needs field \"V\"");
    }
    const ElementSet v = ElementSetFromJson(request.at("V"));
    if (!s.HumanBob()) {
      return Error(409, "WrongPhase", "Bob is played by the engine");
    }
    Referee referee = s.referee;
    referee.ApplyBob(v);
    Json reply{{"bob", ElementSetToJson(v)}};
    if (!s.HumanAlice()) {
      std::optional<AliceState> alice;
      ElementSet a;
      if (s.alice) {
        Response response = Respond(*s.alice, v);
        a = response.colored;
        alice = std::move(response.next);
      } else {
        a = GreedyAliceMove(referee);
      }
      CommitAlice(s, referee, alice, a);
      reply["alice"] = ElementSetToJson(a);
    } else {
      s.referee = std::move(referee);
    }
    s.updated_at = NowIso8601();
    Snapshot(s);
    reply["state"] = PublicState(s, false);
    return {200, reply};
  } catch (const ArenaError& e) {
    return FromError(e);
  }
}

HttpReply SessionStore::AliceMove(const std::string& id,
                                  const std::string& body) {
  auto session = Find(id);
  if (!session) return NotFound(id);
  std::lock_guard lock(session->mu);
  Session& s = *session;
  try {
    const Json request = ParseJson(body);
    if (!request.is_object() || !request.contains("A")) {
      return Error(400, "SpecInvalid", "body needs field \"A\"");
    }
    const ElementSet a = ElementSetFromJson(request.at("A"));
    if (!s.HumanAlice()) {
      return Error(409, "WrongPhase", "Alice is played by the engine");
    }
    Referee referee = s.referee;
    std::optional<AliceState> alice;
    CommitAlice(s, referee, alice, a);
    RunEngines(s);
    s.updated_at = NowIso8601();
    Snapshot(s);
    return {200, Json{{"alice", ElementSetToJson(a)},
                      {"state", PublicState(s, false)}}};
  } catch (const ArenaError& e) {
    return FromError(e);
  }
}

HttpReply SessionStore::Hint(const std::string& id) const {
  auto session = Find(id);
  if (!session) return NotFound(id);
  std::lock_guard lock(session->mu);
  const Session& s = *session;
  try {
    switch (s.referee.state().phase) {
      case Phase::kFinished:
        return Error(409, "Finished", "game is over");
      case Phase::kAwaitingBob:
        if (!s.HumanBob()) break;
        return {200, Json{{"role", "bob"},
                          {"V", ElementSetToJson(SuggestBobMove(s.referee))}}};
      case Phase::kAwaitingAlice:
        if (!s.HumanAlice()) break;
        return {200, Json{{"role", "alice"},
                          {"A", ElementSetToJson(AliceHint(s.referee))}}};
    }
    return Error(409, "WrongPhase", "no human player is to move");
  } catch (const ArenaError& e) {
    return FromError(e);
  }
}

void SessionStore::Snapshot(const Session& s) const {
  if (!state_dir_) return;
  const Json snapshot{
      {"id", s.id},
      {"config", GameConfigToJson(s.config)},
      {"rounds", RoundsToJson(s.rounds)},
      {"pending", s.referee.state().phase == Phase::kAwaitingAlice
                      ? ElementSetToJson(s.referee.state().pending)
                      : Json(nullptr)},
      {"createdAt", s.created_at},
      {"updatedAt", s.updated_at}};
  const auto path = *state_dir_ / (s.id + ".json");
  const auto staging = *state_dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(staging, std::ios::trunc);
    out << snapshot.dump(2) << "\n";
  }
  std::filesystem::rename(staging, path);
}

// Rebuilds each session by replaying its rounds; engine players must
// reproduce the recorded moves.
void SessionStore::LoadSnapshots() {
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      const Json j = ReadJsonFile(entry.path());
      auto session = BuildSession(j.at("id").get<std::string>(),
                                  GameConfigFromJson(j.at("config")));
      Session& s = *session;
      s.created_at = j.at("createdAt").get<std::string>();
      s.updated_at = j.at("updatedAt").get<std::string>();
      for (const Json& round : j.at("rounds")) {
        const ElementSet v = ElementSetFromJson(round.at("bob"));
        const ElementSet a = ElementSetFromJson(round.at("alice"));
        if (s.bob && s.bob->NextMove(s.referee) != v) {
          throw ArenaError(ErrorCode::kSpecInvalid, "engine Bob diverged");
        }
        s.referee.ApplyBob(v);
        if (s.alice) {
          Response response = Respond(*s.alice, v);
          if (response.colored != a) {
            throw ArenaError(ErrorCode::kSpecInvalid, "engine Alice diverged");
          }
          s.alice = std::move(response.next);
        }
        s.referee.ApplyAlice(a);
        s.rounds.push_back({round.at("color").get<int>(), v, a});
      }
      if (!j.at("pending").is_null()) {
        s.referee.ApplyBob(ElementSetFromJson(j.at("pending")));
      }
      sessions_[s.id] = std::move(session);
    } catch (const std::exception& e) {
      spdlog::warn("skipping snapshot {}: {}", entry.path().string(), e.what());
    }
  }
  spdlog::info("restored {} sessions", sessions_.size());
}

struct Server::Impl {
  explicit Impl(SessionStore& s) : store(s) {}
  SessionStore& store;
  httplib::Server http;
};

namespace {

void Send(httplib::Response& res, const HttpReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

Server::Server(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto& http = impl_->http;
  SessionStore& st = impl_->store;
  const std::string id = "/sessions/([A-Za-z0-9_-]+)";
  http.Post("/sessions", [&st](const httplib::Request& req,
                               httplib::Response& res) {
    Send(res, st.Create(req.body));
  });
  http.Get("/sessions", [&st](const httplib::Request&, httplib::Response& res) {
    Send(res, st.List());
  });
  http.Get(id, [&st](const httplib::Request& req, httplib::Response& res) {
    Send(res, st.Get(req.matches[1], req.get_param_value("debug") == "1"));
  });
  http.Delete(id, [&st](const httplib::Request& req, httplib::Response& res) {
    Send(res, st.Delete(req.matches[1]));
  });
  http.Post(id + "/bob-move",
            [&st](const httplib::Request& req, httplib::Response& res) {
              Send(res, st.BobMove(req.matches[1], req.body));
            });
  http.Post(id + "/alice-move",
            [&st](const httplib::Request& req, httplib::Response& res) {
              Send(res, st.AliceMove(req.matches[1], req.body));
            });
  http.Get(id + "/hint",
           [&st](const httplib::Request& req, httplib::Response& res) {
             Send(res, st.Hint(req.matches[1]));
           });
}

Server::~Server() = default;

bool Server::Bind(const std::string& host, int port) {
  return impl_->http.bind_to_port(host, port);
}

int Server::BindAnyPort(const std::string& host) {
  return impl_->http.bind_to_any_port(host);
}

bool Server::Serve() { return impl_->http.listen_after_bind(); }

void Server::Stop() { impl_->http.stop(); }

}  // namespace marena
