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

#include "matroid_arena/union.h"

#include <gtest/gtest.h>

#include <random>

#include "matroid_arena/catalog.h"
#include "matroid_arena/errors.h"
#include "oracles.h"

namespace marena {
namespace {

std::vector<Matroid> Copies(const Matroid& m, int k) {
  return std::vector<Matroid>(k, m);
}

void ExpectValidPartition(std::span<const Matroid> ms, const Cover& cover) {
  ASSERT_EQ(cover.k(), static_cast<int>(ms.size()));
  ElementSet seen;
  for (int i = 0; i < cover.k(); ++i) {
    EXPECT_TRUE(ms[i].IsIndependent(cover.parts[i]));
    EXPECT_FALSE(seen.Intersects(cover.parts[i]));
    seen |= cover.parts[i];
  }
  EXPECT_EQ(seen, ms[0].ground());
}

TEST(UnionCoverTest, K4SplitsIntoTwoForests) {
  const auto ms = Copies(LoadMatroid(CompleteGraph(4)), 2);
  const auto result = UnionCover(ms);
  ASSERT_TRUE(std::holds_alternative<Cover>(result));
  ExpectValidPartition(ms, std::get<Cover>(result));
}

TEST(UnionCoverTest, ThreeParallelElementsNeedThreeColors) {
  const auto ms = Copies(LoadMatroid(UniformSpec{3, 1}), 2);
  const auto result = UnionCover(ms);
  ASSERT_TRUE(std::holds_alternative<DeficiencyWitness>(result));
  const auto& witness = std::get<DeficiencyWitness>(result);
  EXPECT_EQ(witness.set, (ElementSet{0, 1, 2}));
  EXPECT_EQ(witness.supply, 2);
  EXPECT_EQ(witness.demand, 3);
}

TEST(UnionCoverTest, SingleMatroidOnIndependentGround) {
  const auto ms = Copies(LoadMatroid(UniformSpec{3, 3}), 1);
  const auto result = UnionCover(ms);
  ASSERT_TRUE(std::holds_alternative<Cover>(result));
  EXPECT_EQ(std::get<Cover>(result).parts,
            (std::vector<ElementSet>{ElementSet{0, 1, 2}}));
}

TEST(UnionCoverTest, MismatchedGroundSets) {
  const std::vector<Matroid> ms{LoadMatroid(UniformSpec{3, 1}),
                                LoadMatroid(UniformSpec{4, 1})};
  try {
    UnionCover(ms);
    FAIL();
  } catch (const ArenaError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMismatchedGroundSets);
  }
}

// Mixed matroids: every answer is either a valid partition or a witness
// whose rank deficit checks out; feasibility matches brute force.
TEST(UnionCoverTest, MixedMatroidsSoundness) {
  const std::vector<Matroid> pool{
      LoadMatroid(CatalogSpec("K4")),
      LoadMatroid(UniformSpec{6, 2}),
      LoadMatroid(PartitionSpec{{{0, 1, 2}, {3, 4, 5}}, {1, 2}}),
      LoadMatroid(LinearSpec{2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                 {0, 1, 1}, {1, 1, 1}}})};
  for (const Matroid& a : pool) {
    for (const Matroid& b : pool) {
      const std::vector<Matroid> ms{a, b};
      const auto result = UnionCover(ms);
      bool brute = false;
      ForEachSubset(a.ground(), [&](ElementSet first) {
        brute = brute || (a.IsIndependent(first) &&
                          b.IsIndependent(a.ground() - first));
      });
      if (const auto* cover = std::get_if<Cover>(&result)) {
        EXPECT_TRUE(brute);
        ExpectValidPartition(ms, *cover);
      } else {
        EXPECT_FALSE(brute);
        const auto& w = std::get<DeficiencyWitness>(result);
        EXPECT_LT(testing::BruteRank(a, w.set) + testing::BruteRank(b, w.set),
                  w.set.size());
      }
    }
  }
}

TEST(ChromaticNumberTest, Examples) {
  EXPECT_EQ(ChromaticNumber(LoadMatroid(UniformSpec{3, 1})).colors, 3);
  EXPECT_EQ(ChromaticNumber(LoadMatroid(CompleteGraph(4))).colors, 2);
  EXPECT_EQ(ChromaticNumber(LoadMatroid(CompleteGraph(5))).colors, 3);
}

TEST(ChromaticNumberTest, MatchesCoveringFormulaAndBacktracking) {
  for (const CatalogEntry& entry : Catalog()) {
    const Matroid m = LoadMatroid(entry.spec);
    const ChromaticResult result = ChromaticNumber(m);
    EXPECT_EQ(result.colors, testing::MinColorsByBacktracking(m)) << entry.name;
    if (m.size() <= 7) {
      EXPECT_EQ(result.colors, testing::CoveringNumberByFormula(m))
          << entry.name;
    }
    EXPECT_TRUE(IsWCover(m, result.cover, Weighting(m.size(), 1)));
  }
}

TEST(CheckCanonicalColorableTest, Examples) {
  const Matroid k4 = LoadMatroid(CompleteGraph(4));
  const auto k4_result =
      CheckCanonicalColorable(k4, Weighting(6, 1), ListSizes(6, 2));
  ASSERT_TRUE(std::holds_alternative<Cover>(k4_result));
  EXPECT_TRUE(IsWCover(k4, std::get<Cover>(k4_result), Weighting(6, 1)));

  const Matroid u13 = LoadMatroid(UniformSpec{3, 1});
  const auto u13_result =
      CheckCanonicalColorable(u13, Weighting(3, 1), ListSizes(3, 2));
  ASSERT_TRUE(std::holds_alternative<DeficiencyWitness>(u13_result));
  const auto& witness = std::get<DeficiencyWitness>(u13_result);
  EXPECT_EQ(witness.set, (ElementSet{0, 1, 2}));
  EXPECT_EQ(witness.demand, 3);
  EXPECT_EQ(witness.supply, 2);

  const auto zero = CheckCanonicalColorable(k4, Weighting(6, 0), ListSizes(6, 3));
  ASSERT_TRUE(std::holds_alternative<Cover>(zero));
  EXPECT_EQ(std::get<Cover>(zero).parts, std::vector<ElementSet>(3));
}

TEST(CheckCanonicalColorableTest, ListShorterThanWeight) {
  const Matroid m = LoadMatroid(UniformSpec{3, 2});
  const auto result = CheckCanonicalColorable(m, {1, 2, 1}, {2, 1, 2});
  ASSERT_TRUE(std::holds_alternative<DeficiencyWitness>(result));
  const auto& witness = std::get<DeficiencyWitness>(result);
  EXPECT_EQ(witness.set, (ElementSet{1}));
  EXPECT_EQ(witness.demand, 2);
  EXPECT_EQ(witness.supply, 1);
}

TEST(CheckCanonicalColorableTest, RespectsListPositions) {
  // U_{1,2} with lists {1} and {1}: both elements want color 1.
  const Matroid m = LoadMatroid(UniformSpec{2, 1});
  EXPECT_TRUE(std::holds_alternative<DeficiencyWitness>(
      CheckCanonicalColorable(m, {1, 1}, {1, 1})));
  const auto result = CheckCanonicalColorable(m, {1, 1}, {1, 2});
  ASSERT_TRUE(std::holds_alternative<Cover>(result));
  EXPECT_EQ(std::get<Cover>(result).parts,
            (std::vector<ElementSet>{ElementSet{0}, ElementSet{1}}));
}

TEST(BruteForceCoverTest, Examples) {
  const Matroid u24 = LoadMatroid(UniformSpec{4, 2});
  const auto cover = BruteForceCover(u24, Weighting(4, 1), ListSizes(4, 2));
  ASSERT_TRUE(cover.has_value());
  EXPECT_TRUE(IsWCover(u24, *cover, Weighting(4, 1)));
  EXPECT_FALSE(BruteForceCover(u24, Weighting(4, 1), ListSizes(4, 1)));
  const Matroid k5 = LoadMatroid(CompleteGraph(5));
  EXPECT_FALSE(BruteForceCover(k5, Weighting(10, 1), ListSizes(10, 2)));
}

TEST(BruteForceCoverTest, TooLarge) {
  const Matroid m = LoadMatroid(UniformSpec{13, 3});
  EXPECT_THROW(BruteForceCover(m, Weighting(13, 1), ListSizes(13, 2)),
               ArenaError);
  const Matroid small = LoadMatroid(UniformSpec{3, 1});
  EXPECT_THROW(BruteForceCover(small, Weighting(3, 1), ListSizes(3, 5)),
               ArenaError);
}

// Checks one (w, l) instance against brute force plus the soundness of
// whatever came back.
void ExpectAgreement(const Matroid& m, const Weighting& w, const ListSizes& l,
                     const std::string& name) {
  const auto fast = CheckCanonicalColorable(m, w, l);
  const auto slow = BruteForceCover(m, w, l);
  ASSERT_EQ(std::holds_alternative<Cover>(fast), slow.has_value()) << name;
  if (const auto* cover = std::get_if<Cover>(&fast)) {
    ASSERT_TRUE(IsWCover(m, *cover, w));
    for (int s = 0; s < cover->k(); ++s) {
      for (int e : cover->parts[s]) ASSERT_LT(s, l[e]);
    }
    return;
  }
  const auto& witness = std::get<DeficiencyWitness>(fast);
  int demand = 0;
  int supply = 0;
  for (int e : witness.set) demand += w[e];
  const int k = *std::max_element(l.begin(), l.end());
  for (int i = 1; i <= k; ++i) {
    ElementSet layer;
    for (int e : witness.set) {
      if (l[e] >= i) layer.insert(e);
    }
    supply += testing::BruteRank(m, layer);
  }
  ASSERT_EQ(witness.demand, demand);
  ASSERT_EQ(witness.supply, supply);
  ASSERT_LT(supply, demand);
}

TEST(CheckCanonicalColorableTest, ExhaustiveAgreementOnSmallMatroids) {
  for (const CatalogEntry& entry : Catalog()) {
    const Matroid m = LoadMatroid(entry.spec);
    const int n = m.size();
    if (n > 4) continue;
    // Every w in {0,1,2}^n and l in {0..3}^n.
    int combos = 1;
    for (int e = 0; e < n; ++e) combos *= 12;
    for (int code = 0; code < combos; ++code) {
      Weighting w(n);
      ListSizes l(n);
      int rest = code;
      for (int e = 0; e < n; ++e) {
        w[e] = rest % 3;
        l[e] = (rest / 3) % 4;
        rest /= 12;
      }
      ExpectAgreement(m, w, l, entry.name);
    }
  }
}

TEST(CheckCanonicalColorableTest, SampledAgreementUpToSevenElements) {
  std::mt19937 rng(2024);
  for (const CatalogEntry& entry : Catalog()) {
    const Matroid m = LoadMatroid(entry.spec);
    const int n = m.size();
    if (n <= 4 || n > 7) continue;
    for (int trial = 0; trial < 1500; ++trial) {
      Weighting w(n);
      ListSizes l(n);
      for (int e = 0; e < n; ++e) {
        w[e] = static_cast<int>(rng() % 3);
        l[e] = w[e] + static_cast<int>(rng() % (4 - w[e]));
      }
      ExpectAgreement(m, w, l, entry.name);
    }
  }
}

}  // namespace
}  // namespace marena
