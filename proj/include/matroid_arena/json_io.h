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

#ifndef MATROID_ARENA_JSON_IO_H_
#define MATROID_ARENA_JSON_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "matroid_arena/alice.h"
#include "matroid_arena/element_set.h"
#include "matroid_arena/game.h"
#include "matroid_arena/matroid.h"
#include "matroid_arena/union.h"

namespace marena {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

// All parsers throw ArenaError(kSpecInvalid) on malformed input.
Json ReadJsonFile(const std::filesystem::path& path);
Json ParseJson(const std::string& text);

MatroidSpec MatroidSpecFromJson(const Json& j);
Json MatroidSpecToJson(const MatroidSpec& spec);

ElementSet ElementSetFromJson(const Json& j);
Json ElementSetToJson(ElementSet s);

// {"w":[...]} and {"l":[...]}.
Weighting WeightingFromJson(const Json& j);
ListSizes ListSizesFromJson(const Json& j);
// {"lists":[[...], ...]} and {"W":[[...], ...]}.
ColorLists ColorListsFromJson(const Json& j);
Json ColoringToJson(const ColorLists& coloring);

// {"parts":[[...], ...]}.
Json CoverToJson(const Cover& cover);
Cover CoverFromJson(const Json& j);
// {"A":[...],"demand":d,"supply":s}.
Json WitnessToJson(const DeficiencyWitness& witness);

Json GameConfigToJson(const GameConfig& config);
GameConfig GameConfigFromJson(const Json& j);

Json RoundsToJson(const std::vector<Round>& rounds);
Json TranscriptToJson(const Transcript& transcript);
Transcript TranscriptFromJson(const Json& j);

Json VerdictToJson(const Verdict& verdict);

}  // namespace marena

#endif  // MATROID_ARENA_JSON_IO_H_
