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

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "matroid_arena/errors.h"

namespace marena {
namespace {

constexpr int kBruteForceMaxElements = 12;
constexpr int kBruteForceMaxList = 4;

struct Step {
  int from = -1;  // element inserted into `part`
  int part = -1;
};

int SupplyOf(std::span<const Matroid> matroids, ElementSet a) {
  int supply = 0;
  for (const Matroid& m : matroids) supply += m.Rank(a);
  return supply;
}

}  // namespace

int Cover::Multiplicity(int e) const {
  int count = 0;
  for (ElementSet part : parts) count += part.contains(e) ? 1 : 0;
  return count;
}

CoverOrWitness UnionCover(std::span<const Matroid> matroids) {
  const int k = static_cast<int>(matroids.size());
  if (k == 0) {
    // Without matroids there is no ground set to cover.
    return Cover{};
  }
  const int n = matroids[0].size();
  for (const Matroid& m : matroids) {
    if (m.size() != n) {
      throw ArenaError(ErrorCode::kMismatchedGroundSets,
                       "union requires matroids on one ground set");
    }
  }

  std::vector<ElementSet> parts(k);
  std::vector<int> owner(n, -1);

  for (int source = 0; source < n; ++source) {
    std::vector<Step> reached_by(n);
    ElementSet visited = ElementSet::Single(source);
    std::deque<int> queue{source};
    int sink_element = -1;
    int sink_part = -1;

    while (!queue.empty() && sink_element < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int i = 0; i < k && sink_element < 0; ++i) {
        if (owner[x] == i) continue;
        ElementSet grown = parts[i];
        grown.insert(x);
        if (matroids[i].IsIndependent(grown)) {
          sink_element = x;
          sink_part = i;
          break;
        }
        for (int y : parts[i]) {
          if (visited.contains(y)) continue;
          if (matroids[i].IsIndependent(grown - ElementSet::Single(y))) {
            visited.insert(y);
            reached_by[y] = Step{x, i};
            queue.push_back(y);
          }
        }
      }
    }

    if (sink_element < 0) {
      DeficiencyWitness witness{visited, visited.size(),
                                SupplyOf(matroids, visited)};
      if (witness.supply >= witness.demand) {
        throw ArenaError(ErrorCode::kInternalInfeasible,
                         "union search stalled without a deficiency at " +
                             visited.ToString());
      }
      return witness;
    }

    // Shift every element along the path, last hop first.
    parts[sink_part].insert(sink_element);
    int moved = sink_element;
    owner[moved] = sink_part;
    while (moved != source) {
      const Step step = reached_by[moved];
      parts[step.part].erase(moved);
      parts[step.part].insert(step.from);
      owner[step.from] = step.part;
      moved = step.from;
    }
  }

  for (int i = 0; i < k; ++i) {
    if (!matroids[i].IsIndependent(parts[i])) {
      throw ArenaError(ErrorCode::kInternalInfeasible,
                       "augmentation produced dependent part " +
                           std::to_string(i));
    }
  }
  return Cover{std::move(parts)};
}

ChromaticResult ChromaticNumber(const Matroid& m) {
  const int n = m.size();
  if (n == 0) return {};
  const int r = m.FullRank();
  if (r == 0) {
    throw ArenaError(ErrorCode::kLoopDetected, "matroid has rank 0");
  }
  for (int k = (n + r - 1) / r;; ++k) {
    std::vector<Matroid> copies(k, m);
    CoverOrWitness result = UnionCover(copies);
    if (auto* cover = std::get_if<Cover>(&result)) {
      return {k, std::move(*cover)};
    }
  }
}

void CheckWeightsAndLists(const Matroid& m, const Weighting& w,
                          const ListSizes& l) {
  if (static_cast<int>(w.size()) != m.size() ||
      static_cast<int>(l.size()) != m.size()) {
    throw ArenaError(ErrorCode::kSpecInvalid,
                     "weights and list sizes must have one entry per element");
  }
  for (int e = 0; e < m.size(); ++e) {
    if (w[e] < 0 || l[e] < 0) {
      throw ArenaError(ErrorCode::kSpecInvalid,
                       "weights and list sizes must be non-negative");
    }
  }
}

CoverOrWitness CheckCanonicalColorable(const Matroid& m, const Weighting& w,
                                       const ListSizes& l) {
  CheckWeightsAndLists(m, w, l);
  const int n = m.size();
  const int k = n == 0 ? 0 : *std::max_element(l.begin(), l.end());

  // Layer i (0-based) holds the elements whose list reaches color i + 1.
  std::vector<ElementSet> layers(k);
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < l[e]; ++i) layers[i].insert(e);
  }
  auto supply_on = [&](ElementSet a) {
    int supply = 0;
    for (ElementSet layer : layers) supply += m.Rank(a & layer);
    return supply;
  };

  for (int e = 0; e < n; ++e) {
    if (l[e] < w[e]) {
      const ElementSet single = ElementSet::Single(e);
      return DeficiencyWitness{single, w[e], supply_on(single)};
    }
  }

  DerivedMatroid cloned = CloneElements(m, w);
  std::vector<Matroid> restricted;
  restricted.reserve(k);
  for (ElementSet layer : layers) {
    restricted.push_back(
        MaskOutside(cloned.matroid, cloned.map.FromParent(layer)));
  }
  if (k == 0) {
    if (cloned.matroid.size() == 0) return Cover{};
    const int e = cloned.map.to_parent[0];
    return DeficiencyWitness{ElementSet::Single(e), w[e], 0};
  }

  CoverOrWitness result = UnionCover(restricted);
  if (auto* cover = std::get_if<Cover>(&result)) {
    Cover pulled;
    for (ElementSet part : cover->parts) {
      pulled.parts.push_back(cloned.map.ToParent(part));
    }
    if (!IsWCover(m, pulled, w)) {
      throw ArenaError(ErrorCode::kInternalInfeasible,
                       "pulled-back cover is not a w-cover");
    }
    return pulled;
  }
  const ElementSet originals =
      cloned.map.ToParent(std::get<DeficiencyWitness>(result).set);
  DeficiencyWitness witness{originals, 0, supply_on(originals)};
  for (int e : originals) witness.demand += w[e];
  if (witness.supply >= witness.demand) {
    throw ArenaError(ErrorCode::kInternalInfeasible,
                     "pulled-back witness does not certify infeasibility");
  }
  return witness;
}

std::optional<Cover> BruteForceCover(const Matroid& m, const Weighting& w,
                                     const ListSizes& l) {
  CheckWeightsAndLists(m, w, l);
  const int n = m.size();
  const int k = n == 0 ? 0 : *std::max_element(l.begin(), l.end());
  if (n > kBruteForceMaxElements || k > kBruteForceMaxList) {
    throw ArenaError(ErrorCode::kTooLarge,
                     "brute-force cover needs n <= 12 and max list <= 4");
  }
  Cover cover{std::vector<ElementSet>(k)};

  // Assigns a w(e)-subset of colors {1..l(e)} to each e in turn.
  auto place = [&](auto&& self, int e) -> bool {
    if (e == n) return true;
    if (w[e] > l[e]) return false;
    const ElementSet palette = ElementSet::Full(l[e]);
    bool done = false;
    ForEachSubset(palette, [&](ElementSet colors) {
      if (done || colors.size() != w[e]) return;
      for (int c : colors) {
        ElementSet grown = cover.parts[c];
        grown.insert(e);
        if (!m.IsIndependent(grown)) return;
      }
      for (int c : colors) cover.parts[c].insert(e);
      if (self(self, e + 1)) {
        done = true;
        return;
      }
      for (int c : colors) cover.parts[c].erase(e);
    });
    return done;
  };
  if (!place(place, 0)) return std::nullopt;
  return cover;
}

bool IsWCover(const Matroid& m, const Cover& cover, const Weighting& w) {
  for (ElementSet part : cover.parts) {
    if (!part.IsSubsetOf(m.ground()) || !m.IsIndependent(part)) return false;
  }
  for (int e = 0; e < m.size(); ++e) {
    if (cover.Multiplicity(e) != w[e]) return false;
  }
  return true;
}

}  // namespace marena
