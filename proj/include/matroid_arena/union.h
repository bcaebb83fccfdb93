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

#ifndef MATROID_ARENA_UNION_H_
#define MATROID_ARENA_UNION_H_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "matroid_arena/element_set.h"
#include "matroid_arena/matroid.h"

namespace marena {

// Ordered parts I_1..I_k; part index is the color. Parts may overlap when
// the cover has multiplicities (a w-cover).
struct Cover {
  std::vector<ElementSet> parts;

  int k() const { return static_cast<int>(parts.size()); }
  // Number of parts containing e.
  int Multiplicity(int e) const;
  bool operator==(const Cover&) const = default;
};

// A set A whose demand exceeds the total rank the matroids can supply on it,
// which rules out a cover.
struct DeficiencyWitness {
  ElementSet set;
  int demand = 0;
  int supply = 0;
  bool operator==(const DeficiencyWitness&) const = default;
};

using CoverOrWitness = std::variant<Cover, DeficiencyWitness>;

// Partitions the common ground set into parts I_1..I_k with I_i independent
// in matroids[i], using shortest augmenting paths in the exchange digraph.
// Elements are inserted in ascending order. On failure returns the set of
// elements reached by the last search; it satisfies sum_i r_i(A) < |A|.
// Throws kMismatchedGroundSets.
CoverOrWitness UnionCover(std::span<const Matroid> matroids);

struct ChromaticResult {
  int colors = 0;
  Cover cover;
};

// Least k such that k independent sets cover E, with a cover attaining it.
ChromaticResult ChromaticNumber(const Matroid& m);

// Decides whether independent I_1..I_K (K = max l) exist with
// I_i within {e : l(e) >= i} and each e in exactly w(e) parts. The witness
// reports demand w(A) against supply sum_i r(A & E_i).
CoverOrWitness CheckCanonicalColorable(const Matroid& m, const Weighting& w,
                                       const ListSizes& l);

// Exhaustive backtracking answer to the same question; n <= 12 and
// max l <= 4, otherwise kTooLarge.
std::optional<Cover> BruteForceCover(const Matroid& m, const Weighting& w,
                                     const ListSizes& l);

// True iff every part is independent and e is covered exactly w(e) times.
bool IsWCover(const Matroid& m, const Cover& cover, const Weighting& w);

// Validates sizes and signs of a (w, l) pair against the ground set.
void CheckWeightsAndLists(const Matroid& m, const Weighting& w,
                          const ListSizes& l);

}  // namespace marena

#endif  // MATROID_ARENA_UNION_H_
