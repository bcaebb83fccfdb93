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

#include <gtest/gtest.h>

#include <random>

#include "matroid_arena/alice.h"
#include "matroid_arena/catalog.h"
#include "matroid_arena/errors.h"
#include "matroid_arena/union.h"

namespace marena {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ArenaError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInfeasible;
}

GameConfig Config(const std::string& catalog_name, int list_size,
                  const std::string& bob = "full") {
  GameConfig config;
  config.matroid = CatalogSpec(catalog_name);
  const int n = SpecGroundSize(config.matroid);
  config.w = Weighting(n, 1);
  config.l = ListSizes(n, list_size);
  config.bob = bob;
  return config;
}

TEST(RefereeTest, LegalMovesAndPhases) {
  Referee referee(LoadMatroid(UniformSpec{2, 1}), {1, 1}, {2, 2});
  EXPECT_EQ(referee.state().phase, Phase::kAwaitingBob);
  EXPECT_EQ(referee.LegalBobMoves().size(), 3u);
  referee.ApplyBob({0, 1});
  EXPECT_EQ(referee.state().phase, Phase::kAwaitingAlice);
  EXPECT_EQ(CodeOf([&] { referee.LegalBobMoves(); }), ErrorCode::kWrongPhase);
  EXPECT_EQ(CodeOf([&] { referee.ApplyBob({0}); }), ErrorCode::kWrongPhase);
  EXPECT_EQ(referee.AliceEligible(), (ElementSet{0, 1}));
}

TEST(RefereeTest, IllegalAliceMovesLeaveStateAlone) {
  Referee referee(LoadMatroid(UniformSpec{3, 1}), {1, 1, 1}, {2, 2, 2});
  referee.ApplyBob({0, 1});
  const GameState before = referee.state();
  EXPECT_EQ(CodeOf([&] { referee.ApplyAlice({0, 1}); }),
            ErrorCode::kIllegalMove);
  EXPECT_EQ(CodeOf([&] { referee.ApplyAlice({2}); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(referee.state().lists, before.lists);
  EXPECT_EQ(referee.state().pending, before.pending);
  EXPECT_EQ(referee.state().phase, Phase::kAwaitingAlice);
  referee.ApplyAlice({});  // passing is allowed
  EXPECT_EQ(referee.state().round, 2);
  EXPECT_EQ(referee.ResidualWeights(), (Weighting{1, 1, 1}));
  EXPECT_EQ(referee.ResidualLists(), (ListSizes{1, 1, 2}));
}

TEST(RefereeTest, IllegalBobMoves) {
  Referee referee(LoadMatroid(UniformSpec{2, 1}), {1, 1}, {1, 2});
  EXPECT_EQ(CodeOf([&] { referee.ApplyBob({}); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(CodeOf([&] { referee.ApplyBob({4}); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(CodeOf([&] { referee.ApplyAlice({0}); }), ErrorCode::kWrongPhase);
}

TEST(RefereeTest, ShortListTrace) {
  Referee referee(LoadMatroid(UniformSpec{2, 1}), {1, 1}, {1, 2});
  referee.ApplyBob({0});
  referee.ApplyAlice({0});
  EXPECT_EQ(CodeOf([&] { referee.ApplyBob({0, 1}); }),
            ErrorCode::kIllegalMove);
  referee.ApplyBob({1});
  EXPECT_EQ(CodeOf([&] { referee.ApplyAlice({0, 1}); }),
            ErrorCode::kIllegalMove);
  referee.ApplyAlice({1});
  EXPECT_EQ(referee.BobEligible(), (ElementSet{1}));
  referee.ApplyBob({1});
  EXPECT_TRUE(referee.AliceEligible().empty());
  referee.ApplyAlice({});
  EXPECT_EQ(referee.state().phase, Phase::kFinished);
  EXPECT_EQ(referee.Winner(), Player::kAlice);
  EXPECT_TRUE(referee.LegalBobMoves().empty());
  EXPECT_EQ(CodeOf([&] { referee.ApplyBob({1}); }), ErrorCode::kWrongPhase);
}

TEST(RefereeTest, BobWinsWhenWeightUnmet) {
  Referee referee(LoadMatroid(UniformSpec{2, 1}), {1, 1}, {1, 1});
  referee.ApplyBob({0, 1});
  referee.ApplyAlice({0});
  EXPECT_EQ(referee.Winner(), Player::kBob);
}

TEST(RefereeTest, RandomFuzzNeverBreaksState) {
  std::mt19937 rng(99);
  const Matroid m = LoadMatroid(CompleteGraph(4));
  for (int game = 0; game < 300; ++game) {
    Referee referee(m, Weighting(6, 1), ListSizes(6, 2));
    int moves = 0;
    while (referee.state().phase != Phase::kFinished && moves < 200) {
      ++moves;
      const ElementSet guess = ElementSet(rng() & 0x7f);
      const GameState before = referee.state();
      try {
        if (before.phase == Phase::kAwaitingBob) {
          referee.ApplyBob(guess);
        } else {
          referee.ApplyAlice(guess);
        }
      } catch (const ArenaError& e) {
        ASSERT_TRUE(e.code() == ErrorCode::kIllegalMove);
        ASSERT_EQ(referee.state().lists, before.lists);
        ASSERT_EQ(referee.state().assigned, before.assigned);
        ASSERT_EQ(referee.state().phase, before.phase);
        continue;
      }
      for (int e = 0; e < 6; ++e) {
        ASSERT_LE(referee.state().lists[e].size(), 2u);
        ASSERT_LE(referee.state().assigned[e].size(), 1u);
      }
    }
  }
}

TEST(BobStrategyTest, Construction) {
  EXPECT_EQ(CodeOf([] { MakeBob("random", std::nullopt); }),
            ErrorCode::kSpecInvalid);
  EXPECT_EQ(CodeOf([] { MakeBob("nobody", std::nullopt); }),
            ErrorCode::kSpecInvalid);
  EXPECT_NE(MakeBob("random", 3), nullptr);
}

TEST(PlayTest, ParallelPairWithTwoColors) {
  const Transcript t = Play(Config("U1_2", 2));
  ASSERT_EQ(t.rounds.size(), 2u);
  EXPECT_EQ(t.rounds[0], (Round{1, ElementSet{0, 1}, ElementSet{0}}));
  EXPECT_EQ(t.rounds[1], (Round{2, ElementSet{0, 1}, ElementSet{1}}));
  EXPECT_EQ(t.result, Player::kAlice);
}

TEST(PlayTest, TripleNeedsThreeColors) {
  EXPECT_EQ(Play(Config("U1_3", 2)).result, Player::kBob);
  EXPECT_EQ(Play(Config("U1_3", 3)).result, Player::kAlice);
}

TEST(PlayTest, AllBobsLoseAtChromaticNumber) {
  for (const CatalogEntry& entry : Catalog()) {
    const int chi = ChromaticNumber(LoadMatroid(entry.spec)).colors;
    for (const char* bob : {"full", "random", "singletons", "tight"}) {
      GameConfig config = Config(entry.name, chi, bob);
      config.seed = 7;
      const Transcript t = Play(config);
      EXPECT_EQ(t.result, Player::kAlice) << entry.name << " " << bob;
      const Referee replayed = Replay(t);
      EXPECT_EQ(replayed.Winner(), t.result);
    }
  }
}

TEST(PlayTest, RandomBobIsDeterministic) {
  GameConfig config = Config("K4", 2, "random");
  config.seed = 7;
  const Transcript a = Play(config);
  const Transcript b = Play(config);
  EXPECT_EQ(a.rounds, b.rounds);
  EXPECT_EQ(a.result, Player::kAlice);
}

TEST(PlayTest, HumanAliceRejected) {
  GameConfig config = Config("K4", 2);
  config.alice = "human";
  EXPECT_THROW(Play(config), ArenaError);
}

TEST(ReplayTest, RejectsTamperedTranscripts) {
  Transcript t = Play(Config("U1_2", 2));
  Transcript skipped = t;
  skipped.rounds[1].color = 3;
  EXPECT_THROW(Replay(skipped), ArenaError);
  Transcript dependent = t;
  dependent.rounds[0].alice = ElementSet{0, 1};
  EXPECT_THROW(Replay(dependent), ArenaError);
}

TEST(VerifyTest, Examples) {
  const Matroid u12 = LoadMatroid(UniformSpec{2, 1});
  const Verdict alice = VerifyAliceWins(u12, {1, 1}, {2, 2});
  EXPECT_EQ(alice.winner, Player::kAlice);
  EXPECT_TRUE(alice.exhaustive);
  EXPECT_GT(alice.states_explored, 0u);

  const Verdict bob = FindBobWin(u12, {1, 1}, {1, 1});
  EXPECT_EQ(bob.winner, Player::kBob);
  ASSERT_TRUE(bob.counterexample.has_value());
  EXPECT_EQ(Replay(*bob.counterexample).Winner(), Player::kBob);

  const Matroid u13 = LoadMatroid(UniformSpec{3, 1});
  EXPECT_THROW(VerifyAliceWins(u13, {1, 1, 1}, {2, 2, 2}), NotColorableError);
  const Verdict tight = FindBobWin(u13, {1, 1, 1}, {2, 2, 2});
  EXPECT_EQ(tight.winner, Player::kBob);
  EXPECT_EQ(tight.counterexample->rounds.front().bob, (ElementSet{0, 1, 2}));
  EXPECT_EQ(FindBobWin(u13, {1, 1, 1}, {3, 3, 3}).winner, Player::kAlice);
}

TEST(VerifyTest, TooLarge) {
  const Matroid k4 = LoadMatroid(CompleteGraph(4));
  EXPECT_EQ(CodeOf([&] { VerifyAliceWins(k4, Weighting(6, 1), ListSizes(6, 2)); }),
            ErrorCode::kTooLarge);
  const Matroid u12 = LoadMatroid(UniformSpec{2, 1});
  EXPECT_EQ(CodeOf([&] { FindBobWin(u12, {1, 1}, {4, 4}); }),
            ErrorCode::kTooLarge);
}

TEST(VerifyTest, MemoizationDoesNotChangeVerdicts) {
  for (const CatalogEntry& entry : Catalog()) {
    const Matroid m = LoadMatroid(entry.spec);
    const int n = m.size();
    if (n > 3) continue;
    for (int size = 1; size <= 3; ++size) {
      VerifyOptions memo;
      VerifyOptions plain;
      plain.memoize = false;
      const Weighting w(n, 1);
      const ListSizes l(n, size);
      if (std::holds_alternative<Cover>(CheckCanonicalColorable(m, w, l))) {
        EXPECT_EQ(VerifyAliceWins(m, w, l, memo).winner,
                  VerifyAliceWins(m, w, l, plain).winner)
            << entry.name;
      }
      EXPECT_EQ(FindBobWin(m, w, l, memo).winner,
                FindBobWin(m, w, l, plain).winner)
          << entry.name;
      VerifyOptions symmetric;
      symmetric.symmetry = true;
      EXPECT_EQ(FindBobWin(m, w, l, memo).winner,
                FindBobWin(m, w, l, symmetric).winner)
          << entry.name;
    }
  }
}

TEST(VerifyTest, CappedUniverseAgreesOnSmallCatalog) {
  for (const CatalogEntry& entry : Catalog()) {
    const Matroid m = LoadMatroid(entry.spec);
    const int n = m.size();
    if (n > 5) continue;
    const int chi = ChromaticNumber(m).colors;
    if (chi > 3) continue;
    VerifyOptions capped;
    capped.universe = MoveUniverse::kCapped;
    const Verdict v =
        VerifyAliceWins(m, Weighting(n, 1), ListSizes(n, chi), capped);
    EXPECT_EQ(v.winner, Player::kAlice) << entry.name;
  }
}

}  // namespace
}  // namespace marena
