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

#ifndef MATROID_ARENA_GAME_H_
#define MATROID_ARENA_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_arena/element_set.h"
#include "matroid_arena/matroid.h"

namespace marena {

enum class Player { kAlice, kBob };
enum class Phase { kAwaitingBob, kAwaitingAlice, kFinished };

std::string_view PlayerName(Player p);
std::string_view PhaseName(Phase p);

inline constexpr std::string_view kEngine = "engine";
inline constexpr std::string_view kHuman = "human";

struct GameConfig {
  MatroidSpec matroid;
  Weighting w;
  ListSizes l;
  std::string alice = std::string(kEngine);  // "engine" or "human"
  std::string bob = "full";  // built-in Bob name or "human"
  std::optional<std::uint64_t> seed;
};

struct GameState {
  std::vector<std::vector<int>> lists;     // colors revealed per element
  std::vector<std::vector<int>> assigned;  // colors Alice gave per element
  int round = 1;                           // color of the next Bob move
  Phase phase = Phase::kAwaitingBob;
  ElementSet pending;                      // Bob's move awaiting Alice
};

// Enforces the rules of the weighted on-line coloring game: Bob reveals the
// next color on a non-empty set of elements whose lists are not yet full,
// then Alice colors an independent subset of it. The game ends when every
// list holds l(e) colors; Alice wins iff every e holds w(e) colors.
// Rejected moves leave the state untouched.
class Referee {
 public:
  Referee(Matroid m, Weighting w, ListSizes l);

  const GameState& state() const { return state_; }
  const Matroid& matroid() const { return matroid_; }
  const Weighting& weights() const { return w_; }
  const ListSizes& list_sizes() const { return l_; }

  // Elements Bob may still reveal a color on.
  ElementSet BobEligible() const;
  // Every non-empty subset of BobEligible(); empty once finished. Throws
  // kWrongPhase while Alice is to move.
  std::vector<ElementSet> LegalBobMoves() const;
  // Elements of the pending move that Alice may still color.
  ElementSet AliceEligible() const;

  void ApplyBob(ElementSet v);
  void ApplyAlice(ElementSet a);

  // Set once the phase is kFinished.
  std::optional<Player> Winner() const;

  Weighting ResidualWeights() const;
  ListSizes ResidualLists() const;

 private:
  void FinishIfListsFull();

  Matroid matroid_;
  Weighting w_;
  ListSizes l_;
  GameState state_;
};

struct Round {
  int color = 0;
  ElementSet bob;
  ElementSet alice;
  bool operator==(const Round&) const = default;
};

struct Transcript {
  GameConfig config;
  std::vector<Round> rounds;
  std::optional<Player> result;
};

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  // Called only while the referee awaits Bob.
  virtual ElementSet NextMove(const Referee& referee) = 0;
};

// Built-in adversaries: "full", "random" (needs a seed), "singletons",
// "tight". Throws kSpecInvalid for other names.
std::unique_ptr<BobStrategy> MakeBob(std::string_view name,
                                     std::optional<std::uint64_t> seed);

// Alice's fallback when the engine strategy cannot start: the greedy
// maximal independent subset of AliceEligible().
ElementSet GreedyAliceMove(const Referee& referee);

// Suggests a Bob move: the eligible set maximizing outstanding weight per
// unit of rank, ties to the larger set.
ElementSet SuggestBobMove(const Referee& referee);

// Plays a full game between built-in players. Engine Alice uses the on-line
// strategy, or the greedy fallback when the canonical lists already fail.
Transcript Play(const GameConfig& config);

// Re-applies every round through a fresh referee. Throws kIllegalMove for
// an illegal round and kSpecInvalid for colors out of sequence.
Referee Replay(const Transcript& transcript);

enum class MoveUniverse {
  kFull,    // every non-empty eligible subset
  kCapped,  // singletons, pairs and the whole eligible set
};

struct VerifyOptions {
  int max_elements = 5;
  int max_list = 3;
  MoveUniverse universe = MoveUniverse::kFull;
  bool memoize = true;
  // Only consulted by FindBobWin, and only for uniform matroids.
  bool symmetry = false;
};

struct Verdict {
  Player winner = Player::kAlice;
  std::uint64_t states_explored = 0;
  bool exhaustive = true;
  std::optional<Transcript> counterexample;
};

// Explores every Bob move sequence against the deterministic engine Alice.
// Requires a feasible (w, l) and a matroid with a spec. Throws kTooLarge
// when the limits are exceeded in kFull mode.
Verdict VerifyAliceWins(const Matroid& m, const Weighting& w,
                        const ListSizes& l, const VerifyOptions& options = {});

// Minimax with Bob choosing and Alice answering with every legal
// independent set. A Bob win comes with a transcript of one losing play
// (Alice answering greedily).
Verdict FindBobWin(const Matroid& m, const Weighting& w, const ListSizes& l,
                   const VerifyOptions& options = {});

}  // namespace marena

#endif  // MATROID_ARENA_GAME_H_
