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

#include "matroid_arena/game.h"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "matroid_arena/alice.h"
#include "matroid_arena/errors.h"
#include "matroid_arena/union.h"

namespace marena {
namespace {

constexpr int kMaxEnumeratedElements = 20;

[[noreturn]] void Illegal(const std::string& reason) {
  throw ArenaError(ErrorCode::kIllegalMove, reason);
}

class FullBob : public BobStrategy {
 public:
  ElementSet NextMove(const Referee& referee) override {
    return referee.BobEligible();
  }
};

class RandomBob : public BobStrategy {
 public:
  explicit RandomBob(std::uint64_t seed) : rng_(seed) {}
  ElementSet NextMove(const Referee& referee) override {
    const ElementSet eligible = referee.BobEligible();
    while (true) {
      const ElementSet pick(rng_() & eligible.bits());
      if (!pick.empty()) return pick;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Reveals one element per round, cycling through the ground set.
class SingletonsBob : public BobStrategy {
 public:
  ElementSet NextMove(const Referee& referee) override {
    const ElementSet eligible = referee.BobEligible();
    const int n = referee.matroid().size();
    for (int step = 0; step < n; ++step) {
      const int e = (cursor_ + step) % n;
      if (eligible.contains(e)) {
        cursor_ = (e + 1) % n;
        return ElementSet::Single(e);
      }
    }
    return eligible;
  }

 private:
  int cursor_ = 0;
};

// Shrinks the eligible set to a circuit when it is dependent.
class TightBob : public BobStrategy {
 public:
  ElementSet NextMove(const Referee& referee) override {
    const Matroid& m = referee.matroid();
    ElementSet move = referee.BobEligible();
    if (m.IsIndependent(move)) return move;
    for (int e : move) {
      const ElementSet smaller = move - ElementSet::Single(e);
      if (!m.IsIndependent(smaller)) move = smaller;
    }
    return move;
  }
};

bool AllZero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

void CheckLimits(const Matroid& m, const ListSizes& l,
                 const VerifyOptions& options) {
  const int max_l = l.empty() ? 0 : *std::max_element(l.begin(), l.end());
  if (m.size() > options.max_elements || max_l > options.max_list) {
    throw ArenaError(ErrorCode::kTooLarge,
                     "exhaustive search is capped at n <= " +
                         std::to_string(options.max_elements) +
                         " and max list <= " +
                         std::to_string(options.max_list));
  }
}

std::vector<ElementSet> BobMoves(ElementSet eligible, MoveUniverse universe) {
  std::vector<ElementSet> moves;
  if (universe == MoveUniverse::kFull) {
    ForEachSubset(eligible, [&](ElementSet v) {
      if (!v.empty()) moves.push_back(v);
    });
    return moves;
  }
  for (int e : eligible) {
    moves.push_back(ElementSet::Single(e));
    for (int f : eligible) {
      if (f > e) moves.push_back(ElementSet{e, f});
    }
  }
  if (eligible.size() > 2) moves.push_back(eligible);
  return moves;
}

GameConfig ConfigFor(const Matroid& m, const Weighting& w, const ListSizes& l,
                     std::string bob) {
  if (!m.spec()) {
    throw ArenaError(ErrorCode::kPreconditionViolated,
                     "verification needs a matroid loaded from a spec");
  }
  GameConfig config;
  config.matroid = *m.spec();
  config.w = w;
  config.l = l;
  config.bob = std::move(bob);
  return config;
}

void AppendInts(std::string& key, const std::vector<int>& values) {
  for (int v : values) key.push_back(static_cast<char>(v));
}

}  // namespace

std::string_view PlayerName(Player p) {
  return p == Player::kAlice ? "alice" : "bob";
}

std::string_view PhaseName(Phase p) {
  switch (p) {
    case Phase::kAwaitingBob:
      return "awaiting-bob";
    case Phase::kAwaitingAlice:
      return "awaiting-alice";
    case Phase::kFinished:
      return "finished";
  }
  return "unknown";
}

Referee::Referee(Matroid m, Weighting w, ListSizes l)
    : matroid_(std::move(m)), w_(std::move(w)), l_(std::move(l)) {
  CheckWeightsAndLists(matroid_, w_, l_);
  state_.lists.resize(matroid_.size());
  state_.assigned.resize(matroid_.size());
  FinishIfListsFull();
}

ElementSet Referee::BobEligible() const {
  ElementSet eligible;
  for (int e = 0; e < matroid_.size(); ++e) {
    if (static_cast<int>(state_.lists[e].size()) < l_[e]) eligible.insert(e);
  }
  return eligible;
}

std::vector<ElementSet> Referee::LegalBobMoves() const {
  if (state_.phase == Phase::kAwaitingAlice) {
    throw ArenaError(ErrorCode::kWrongPhase, "Alice is to move");
  }
  if (state_.phase == Phase::kFinished) return {};
  const ElementSet eligible = BobEligible();
  if (eligible.size() > kMaxEnumeratedElements) {
    throw ArenaError(ErrorCode::kTooLarge, "too many legal Bob moves to list");
  }
  return BobMoves(eligible, MoveUniverse::kFull);
}

ElementSet Referee::AliceEligible() const {
  ElementSet eligible;
  for (int e : state_.pending) {
    if (static_cast<int>(state_.assigned[e].size()) < w_[e]) eligible.insert(e);
  }
  return eligible;
}

void Referee::ApplyBob(ElementSet v) {
  if (state_.phase != Phase::kAwaitingBob) {
    throw ArenaError(ErrorCode::kWrongPhase,
                     state_.phase == Phase::kFinished ? "game is finished"
                                                      : "Alice is to move");
  }
  if (v.empty()) Illegal("Bob must reveal a non-empty set");
  if (!v.IsSubsetOf(matroid_.ground())) {
    Illegal("element " + std::to_string(v.bound() - 1) + " does not exist");
  }
  const ElementSet full = v - BobEligible();
  if (!full.empty()) {
    Illegal("list of element " + std::to_string(*full.begin()) + " is full");
  }
  for (int e : v) state_.lists[e].push_back(state_.round);
  state_.pending = v;
  state_.phase = Phase::kAwaitingAlice;
}

void Referee::ApplyAlice(ElementSet a) {
  if (state_.phase != Phase::kAwaitingAlice) {
    throw ArenaError(ErrorCode::kWrongPhase,
                     state_.phase == Phase::kFinished ? "game is finished"
                                                      : "Bob is to move");
  }
  if (!a.IsSubsetOf(state_.pending)) {
    Illegal("colored set is not a subset of Bob's move");
  }
  const ElementSet saturated = a - AliceEligible();
  if (!saturated.empty()) {
    Illegal("weight of element " + std::to_string(*saturated.begin()) +
            " exceeded");
  }
  if (!matroid_.IsIndependent(a)) Illegal("colored set is dependent");
  for (int e : a) state_.assigned[e].push_back(state_.round);
  state_.pending = ElementSet{};
  ++state_.round;
  state_.phase = Phase::kAwaitingBob;
  FinishIfListsFull();
}

void Referee::FinishIfListsFull() {
  if (BobEligible().empty()) state_.phase = Phase::kFinished;
}

std::optional<Player> Referee::Winner() const {
  if (state_.phase != Phase::kFinished) return std::nullopt;
  for (int e = 0; e < matroid_.size(); ++e) {
    if (static_cast<int>(state_.assigned[e].size()) != w_[e]) {
      return Player::kBob;
    }
  }
  return Player::kAlice;
}

Weighting Referee::ResidualWeights() const {
  Weighting residual(w_);
  for (int e = 0; e < matroid_.size(); ++e) {
    residual[e] -= static_cast<int>(state_.assigned[e].size());
  }
  return residual;
}

ListSizes Referee::ResidualLists() const {
  ListSizes residual(l_);
  for (int e = 0; e < matroid_.size(); ++e) {
    residual[e] -= static_cast<int>(state_.lists[e].size());
  }
  return residual;
}

std::unique_ptr<BobStrategy> MakeBob(std::string_view name,
                                     std::optional<std::uint64_t> seed) {
  if (name == "full") return std::make_unique<FullBob>();
  if (name == "singletons") return std::make_unique<SingletonsBob>();
  if (name == "tight") return std::make_unique<TightBob>();
  if (name == "random") {
    if (!seed) {
      throw ArenaError(ErrorCode::kSpecInvalid, "random Bob needs a seed");
    }
    return std::make_unique<RandomBob>(*seed);
  }
  throw ArenaError(ErrorCode::kSpecInvalid,
                   "unknown Bob strategy '" + std::string(name) + "'");
}

ElementSet GreedyAliceMove(const Referee& referee) {
  return referee.matroid().MaximalIndependentSubset(referee.AliceEligible());
}

ElementSet SuggestBobMove(const Referee& referee) {
  const ElementSet eligible = referee.BobEligible();
  if (eligible.size() > kMaxEnumeratedElements) return eligible;
  const Weighting residual = referee.ResidualWeights();
  ElementSet best = eligible;
  long best_demand = -1;
  long best_rank = 1;
  ForEachSubset(eligible, [&](ElementSet a) {
    if (a.empty()) return;
    long demand = 0;
    for (int e : a) demand += std::max(residual[e], 0);
    const long rank = referee.matroid().Rank(a);
    if (rank == 0) return;
    const long lhs = demand * best_rank;
    const long rhs = best_demand * rank;
    if (lhs > rhs || (lhs == rhs && a.size() > best.size())) {
      best = a;
      best_demand = demand;
      best_rank = rank;
    }
  });
  return best_demand <= 0 ? eligible : best;
}

Transcript Play(const GameConfig& config) {
  const Matroid m = LoadMatroid(config.matroid);
  if (config.alice != kEngine) {
    throw ArenaError(ErrorCode::kSpecInvalid,
                     "play needs the engine as Alice");
  }
  std::unique_ptr<BobStrategy> bob = MakeBob(config.bob, config.seed);
  Referee referee(m, config.w, config.l);

  std::optional<AliceState> alice;
  try {
    alice = InitAlice(m, config.w, config.l);
  } catch (const NotColorableError&) {
    alice.reset();
  }

  Transcript transcript{config, {}, std::nullopt};
  while (referee.state().phase != Phase::kFinished) {
    const ElementSet v = bob->NextMove(referee);
    const int color = referee.state().round;
    referee.ApplyBob(v);
    ElementSet a;
    if (alice) {
      Response response = Respond(*alice, v);
      a = response.colored;
      alice = std::move(response.next);
    } else {
      a = GreedyAliceMove(referee);
    }
    referee.ApplyAlice(a);
    transcript.rounds.push_back({color, v, a});
  }
  transcript.result = referee.Winner();
  return transcript;
}

Referee Replay(const Transcript& transcript) {
  const GameConfig& config = transcript.config;
  Referee referee(LoadMatroid(config.matroid), config.w, config.l);
  for (const Round& round : transcript.rounds) {
    if (round.color != referee.state().round) {
      throw ArenaError(ErrorCode::kSpecInvalid,
                       "round colors must run 1, 2, 3, ...");
    }
    referee.ApplyBob(round.bob);
    referee.ApplyAlice(round.alice);
  }
  return referee;
}

Verdict VerifyAliceWins(const Matroid& m, const Weighting& w,
                        const ListSizes& l, const VerifyOptions& options) {
  CheckWeightsAndLists(m, w, l);
  const bool exhaustive = options.universe == MoveUniverse::kFull;
  if (exhaustive) CheckLimits(m, l, options);
  GameConfig config = ConfigFor(m, w, l, "verifier");
  const AliceState start = InitAlice(m, w, l);

  Verdict verdict;
  verdict.exhaustive = exhaustive;
  std::unordered_set<std::string> won;
  std::vector<Round> path;

  auto explore = [&](auto&& self, const AliceState& state) -> bool {
    std::string key;
    if (options.memoize) {
      AppendInts(key, state.residual_l);
      for (ElementSet part : state.cover.parts) {
        key.append(reinterpret_cast<const char*>(&part), sizeof(part));
      }
      if (won.contains(key)) return true;
    }
    ++verdict.states_explored;
    ElementSet eligible;
    for (int e = 0; e < m.size(); ++e) {
      if (state.residual_l[e] > 0) eligible.insert(e);
    }
    if (eligible.empty()) return AllZero(state.residual_w);
    for (ElementSet v : BobMoves(eligible, options.universe)) {
      Response response = Respond(state, v);
      path.push_back({state.round, v, response.colored});
      if (!self(self, response.next)) return false;
      path.pop_back();
    }
    if (options.memoize) won.insert(std::move(key));
    return true;
  };

  if (!explore(explore, start)) {
    verdict.winner = Player::kBob;
    verdict.counterexample = Transcript{config, path, Player::kBob};
  }
  return verdict;
}

Verdict FindBobWin(const Matroid& m, const Weighting& w, const ListSizes& l,
                   const VerifyOptions& options) {
  CheckWeightsAndLists(m, w, l);
  CheckLimits(m, l, options);
  const int n = m.size();
  const bool symmetric =
      options.symmetry && m.spec() && std::holds_alternative<UniformSpec>(*m.spec());

  // Outcome depends only on the residual list sizes and weights.
  struct Position {
    std::vector<int> lists;
    std::vector<int> weights;
  };
  auto key_of = [&](const Position& p) {
    std::string key;
    if (symmetric) {
      std::vector<std::pair<int, int>> pairs(n);
      for (int e = 0; e < n; ++e) pairs[e] = {p.lists[e], p.weights[e]};
      std::sort(pairs.begin(), pairs.end());
      for (const auto& [a, b] : pairs) {
        key.push_back(static_cast<char>(a));
        key.push_back(static_cast<char>(b));
      }
      return key;
    }
    AppendInts(key, p.lists);
    AppendInts(key, p.weights);
    return key;
  };

  // Every independent answer to `v`, largest first.
  auto alice_answers = [&](const Position& p, ElementSet v) {
    ElementSet open;
    for (int e : v) {
      if (p.weights[e] > 0) open.insert(e);
    }
    std::vector<ElementSet> answers;
    ForEachSubset(open, [&](ElementSet a) {
      if (m.IsIndependent(a)) answers.push_back(a);
    });
    std::stable_sort(answers.begin(), answers.end(),
                     [](ElementSet a, ElementSet b) { return a.size() > b.size(); });
    return answers;
  };
  auto advance = [](Position p, ElementSet v, ElementSet a) {
    for (int e : v) --p.lists[e];
    for (int e : a) --p.weights[e];
    return p;
  };

  Verdict verdict;
  std::unordered_map<std::string, bool> memo;

  auto bob_wins = [&](auto&& self, const Position& p) -> bool {
    std::string key;
    if (options.memoize) {
      key = key_of(p);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    ++verdict.states_explored;
    ElementSet eligible;
    for (int e = 0; e < n; ++e) {
      if (p.lists[e] > 0) eligible.insert(e);
    }
    bool result = false;
    if (eligible.empty()) {
      result = !AllZero(p.weights);
    } else {
      for (ElementSet v : BobMoves(eligible, MoveUniverse::kFull)) {
        bool every_answer_loses = true;
        for (ElementSet a : alice_answers(p, v)) {
          if (!self(self, advance(p, v, a))) {
            every_answer_loses = false;
            break;
          }
        }
        if (every_answer_loses) {
          result = true;
          break;
        }
      }
    }
    if (options.memoize) memo.emplace(std::move(key), result);
    return result;
  };

  Position position{l, w};
  if (!bob_wins(bob_wins, position)) {
    verdict.winner = Player::kAlice;
    return verdict;
  }

  // Walk one play: Bob keeps choosing a winning move, Alice answers
  // greedily with the first (largest) independent answer.
  Transcript transcript{ConfigFor(m, w, l, "minimax"), {}, std::nullopt};
  int color = 1;
  while (true) {
    ElementSet eligible;
    for (int e = 0; e < n; ++e) {
      if (position.lists[e] > 0) eligible.insert(e);
    }
    if (eligible.empty()) break;
    std::optional<ElementSet> chosen;
    for (ElementSet v : BobMoves(eligible, MoveUniverse::kFull)) {
      const auto answers = alice_answers(position, v);
      const bool winning = std::all_of(
          answers.begin(), answers.end(), [&](ElementSet a) {
            return bob_wins(bob_wins, advance(position, v, a));
          });
      if (winning) {
        chosen = v;
        break;
      }
    }
    if (!chosen) {
      throw ArenaError(ErrorCode::kInternalInfeasible,
                       "lost track of Bob's winning line");
    }
    const ElementSet a = alice_answers(position, *chosen).front();
    transcript.rounds.push_back({color++, *chosen, a});
    position = advance(position, *chosen, a);
  }
  transcript.result = Player::kBob;
  verdict.winner = Player::kBob;
  verdict.counterexample = std::move(transcript);
  return verdict;
}

}  // namespace marena
