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

#include "matroid_arena/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "matroid_arena/errors.h"

namespace marena {
namespace {

[[noreturn]] void Malformed(const std::string& reason) {
  throw ArenaError(ErrorCode::kSpecInvalid, reason);
}

// Runs `parse`, turning library type errors into kSpecInvalid.
template <typename Fn>
auto Guarded(const char* what, Fn&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    Malformed(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<int> IntArray(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) {
      Malformed(std::string(what) + " must hold integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> IntArrays(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& x : j) out.push_back(IntArray(x, what));
  return out;
}

}  // namespace

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

Json ParseJson(const std::string& text) {
  return Guarded("JSON", [&] { return Json::parse(text); });
}

MatroidSpec MatroidSpecFromJson(const Json& j) {
  return Guarded("matroid", [&]() -> MatroidSpec {
    const std::string type = Field(j, "type").get<std::string>();
    if (type == "uniform") {
      return UniformSpec{Field(j, "n").get<int>(), Field(j, "r").get<int>()};
    }
    if (type == "partition") {
      return PartitionSpec{IntArrays(Field(j, "blocks"), "blocks"),
                           IntArray(Field(j, "capacities"), "capacities")};
    }
    if (type == "graphic") {
      GraphicSpec spec{Field(j, "vertices").get<int>(), {}};
      for (const auto& edge : IntArrays(Field(j, "edges"), "edges")) {
        if (edge.size() != 2) Malformed("an edge needs two endpoints");
        spec.edges.emplace_back(edge[0], edge[1]);
      }
      return spec;
    }
    if (type == "linear") {
      LinearSpec spec{Field(j, "prime").get<std::int64_t>(), {}};
      for (const Json& column : Field(j, "columns")) {
        spec.columns.push_back(column.get<std::vector<std::int64_t>>());
      }
      return spec;
    }
    if (type == "explicit") {
      return ExplicitSpec{Field(j, "n").get<int>(),
                          IntArrays(Field(j, "independent"), "independent")};
    }
    Malformed("unknown matroid type '" + type + "'");
  });
}

Json MatroidSpecToJson(const MatroidSpec& spec) {
  struct Visitor {
    Json operator()(const UniformSpec& s) const {
      return Json{{"type", "uniform"}, {"n", s.n}, {"r", s.r}};
    }
    Json operator()(const PartitionSpec& s) const {
      return Json{{"type", "partition"},
                  {"blocks", s.blocks},
                  {"capacities", s.capacities}};
    }
    Json operator()(const GraphicSpec& s) const {
      Json edges = Json::array();
      for (const auto& [a, b] : s.edges) edges.push_back(Json::array({a, b}));
      return Json{{"type", "graphic"},
                  {"vertices", s.vertex_count},
                  {"edges", edges}};
    }
    Json operator()(const LinearSpec& s) const {
      return Json{{"type", "linear"},
                  {"prime", s.prime},
                  {"columns", s.columns}};
    }
    Json operator()(const ExplicitSpec& s) const {
      return Json{{"type", "explicit"},
                  {"n", s.n},
                  {"independent", s.independent_sets}};
    }
  };
  return std::visit(Visitor{}, spec);
}

ElementSet ElementSetFromJson(const Json& j) {
  ElementSet s;
  for (int e : IntArray(j, "element set")) {
    if (e < 0 || e >= ElementSet::kMaxElements) {
      Malformed("element " + std::to_string(e) + " out of range");
    }
    if (s.contains(e)) {
      Malformed("element " + std::to_string(e) + " listed twice");
    }
    s.insert(e);
  }
  return s;
}

Json ElementSetToJson(ElementSet s) { return Json(s.ToVector()); }

Weighting WeightingFromJson(const Json& j) {
  return IntArray(Field(j, "w"), "w");
}

ListSizes ListSizesFromJson(const Json& j) {
  return IntArray(Field(j, "l"), "l");
}

ColorLists ColorListsFromJson(const Json& j) {
  return IntArrays(Field(j, "lists"), "lists");
}

Json ColoringToJson(const ColorLists& coloring) {
  return Json{{"W", coloring}};
}

Json CoverToJson(const Cover& cover) {
  Json parts = Json::array();
  for (ElementSet part : cover.parts) parts.push_back(ElementSetToJson(part));
  return Json{{"parts", parts}};
}

Cover CoverFromJson(const Json& j) {
  const Json& parts = Field(j, "parts");
  if (!parts.is_array()) Malformed("parts must be an array");
  Cover cover;
  for (const Json& part : parts) {
    cover.parts.push_back(ElementSetFromJson(part));
  }
  return cover;
}

Json WitnessToJson(const DeficiencyWitness& witness) {
  return Json{{"A", ElementSetToJson(witness.set)},
              {"demand", witness.demand},
              {"supply", witness.supply}};
}

Json GameConfigToJson(const GameConfig& config) {
  Json j{{"matroid", MatroidSpecToJson(config.matroid)},
         {"w", config.w},
         {"l", config.l},
         {"alice", config.alice},
         {"bob", config.bob}};
  if (config.seed) j["seed"] = *config.seed;
  return j;
}

// "w" defaults to all ones; "k" may stand in for a constant "l".
GameConfig GameConfigFromJson(const Json& j) {
  return Guarded("game config", [&] {
    GameConfig config;
    config.matroid = MatroidSpecFromJson(Field(j, "matroid"));
    const int n = SpecGroundSize(config.matroid);
    config.w = j.contains("w") ? IntArray(j.at("w"), "w")
                               : std::vector<int>(n, 1);
    if (j.contains("l")) {
      config.l = IntArray(j.at("l"), "l");
    } else if (j.contains("k")) {
      config.l = std::vector<int>(n, j.at("k").get<int>());
    } else {
      Malformed("game config needs \"l\" or \"k\"");
    }
    if (j.contains("alice")) config.alice = j.at("alice").get<std::string>();
    if (j.contains("bob")) config.bob = j.at("bob").get<std::string>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
  });
}

Json RoundsToJson(const std::vector<Round>& rounds) {
  Json out = Json::array();
  for (const Round& round : rounds) {
    out.push_back(Json{{"color", round.color},
                       {"bob", ElementSetToJson(round.bob)},
                       {"alice", ElementSetToJson(round.alice)}});
  }
  return out;
}

Json TranscriptToJson(const Transcript& transcript) {
  Json j{{"config", GameConfigToJson(transcript.config)},
         {"rounds", RoundsToJson(transcript.rounds)}};
  j["result"] = transcript.result ? Json(PlayerName(*transcript.result))
                                  : Json(nullptr);
  return j;
}

Transcript TranscriptFromJson(const Json& j) {
  return Guarded("transcript", [&] {
    Transcript transcript{GameConfigFromJson(Field(j, "config")), {}, {}};
    for (const Json& round : Field(j, "rounds")) {
      transcript.rounds.push_back({Field(round, "color").get<int>(),
                                   ElementSetFromJson(Field(round, "bob")),
                                   ElementSetFromJson(Field(round, "alice"))});
    }
    const Json& result = Field(j, "result");
    if (result == "alice") {
      transcript.result = Player::kAlice;
    } else if (result == "bob") {
      transcript.result = Player::kBob;
    } else if (!result.is_null()) {
      Malformed("result must be \"alice\", \"bob\" or null");
    }
    return transcript;
  });
}

Json VerdictToJson(const Verdict& verdict) {
  Json j{{"winner", PlayerName(verdict.winner)},
         {"statesExplored", verdict.states_explored},
         {"exhaustive", verdict.exhaustive}};
  if (verdict.counterexample) {
    j["counterexample"] = TranscriptToJson(*verdict.counterexample);
  }
  return j;
}

}  // namespace marena
