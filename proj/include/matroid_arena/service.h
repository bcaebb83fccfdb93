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

#ifndef MATROID_ARENA_SERVICE_H_
#define MATROID_ARENA_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "matroid_arena/json_io.h"

namespace marena {

struct HttpReply {
  int status = 200;
  Json body;
};

struct Session;

// Game sessions behind the HTTP API, independent of any transport. Moves
// on one session are serialized; a rejected move leaves the session as it
// was. With a state directory every session is snapshotted to
// <dir>/<id>.json after each change and reloaded on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = {});
  ~SessionStore();
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  HttpReply Create(const std::string& body);
  HttpReply List() const;
  HttpReply Get(const std::string& id, bool debug = false) const;
  HttpReply Delete(const std::string& id);
  HttpReply BobMove(const std::string& id, const std::string& body);
  HttpReply AliceMove(const std::string& id, const std::string& body);
  HttpReply Hint(const std::string& id) const;

  std::size_t size() const;

 private:
  std::shared_ptr<Session> Find(const std::string& id) const;
  void Snapshot(const Session& session) const;
  void LoadSnapshots();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// HTTP front end for a SessionStore.
class Server {
 public:
  explicit Server(SessionStore& store);
  ~Server();

  // Returns false when the address cannot be bound.
  bool Bind(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int BindAnyPort(const std::string& host);
  // Blocks until Stop().
  bool Serve();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace marena

#endif  // MATROID_ARENA_SERVICE_H_
