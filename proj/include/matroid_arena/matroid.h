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

#ifndef MATROID_ARENA_MATROID_H_
#define MATROID_ARENA_MATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroid_arena/element_set.h"

namespace marena {

// Per-element natural-number functions. Index is the element id.
using Weighting = std::vector<int>;
using ListSizes = std::vector<int>;

struct UniformSpec {
  int n = 0;
  int r = 0;
};

struct PartitionSpec {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

// Edge i of `edges` is element i.
struct GraphicSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Column i is element i; entries are residues modulo `prime`.
struct LinearSpec {
  std::int64_t prime = 2;
  std::vector<std::vector<std::int64_t>> columns;
};

struct ExplicitSpec {
  int n = 0;
  std::vector<std::vector<int>> independent_sets;
};

using MatroidSpec =
    std::variant<UniformSpec, PartitionSpec, GraphicSpec, LinearSpec,
                 ExplicitSpec>;

// Number of elements the spec describes; does not validate.
int SpecGroundSize(const MatroidSpec& spec);

class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  // `s` is guaranteed to lie inside the ground set.
  virtual bool IsIndependent(ElementSet s) const = 0;
};

// An immutable matroid on the ground set {0, ..., size()-1} accessed through
// an independence oracle. Copies share the oracle.
class Matroid {
 public:
  Matroid(int n, std::shared_ptr<const IndependenceOracle> oracle,
          std::optional<MatroidSpec> spec = std::nullopt);

  int size() const { return n_; }
  ElementSet ground() const { return ElementSet::Full(n_); }
  // The declarative description, present only for matroids built by
  // LoadMatroid.
  const std::optional<MatroidSpec>& spec() const { return spec_; }

  // Throws kOutOfRange when `s` leaves the ground set.
  bool IsIndependent(ElementSet s) const;
  int Rank(ElementSet s) const;
  // Greedy in ascending element order.
  ElementSet MaximalIndependentSubset(ElementSet s) const;
  bool IsBasis(ElementSet s) const;
  int FullRank() const { return Rank(ground()); }

  void CheckInGround(ElementSet s) const;

 private:
  int n_;
  std::shared_ptr<const IndependenceOracle> oracle_;
  std::optional<MatroidSpec> spec_;
};

// Validates `spec` and builds its oracle. Throws kSpecInvalid,
// kLoopDetected or kNotDownwardClosed.
Matroid LoadMatroid(const MatroidSpec& spec);

// Relates the ground set of a derived matroid to its parent: element i of the
// derived matroid stands for parent element to_parent[i].
struct ElementMap {
  std::vector<int> to_parent;

  ElementSet ToParent(ElementSet s) const;
  // All derived elements whose parent lies in `s`.
  ElementSet FromParent(ElementSet s) const;
};

struct DerivedMatroid {
  Matroid matroid;
  ElementMap map;
};

// Matroid on `s`, relabeled to {0, ..., |s|-1} in ascending order.
DerivedMatroid Restrict(const Matroid& m, ElementSet s);

// Contraction by an independent set `c`; the ground set is E - c relabeled.
// Throws kDependentContraction if `c` is dependent.
DerivedMatroid Contract(const Matroid& m, ElementSet c);

// mult[e] parallel copies of every element e. Copies of one element are
// consecutive; a copy set is independent iff it uses each original at most
// once and the originals form an independent set.
DerivedMatroid CloneElements(const Matroid& m, std::span<const int> mult);

// Same ground set as `m`, but every element outside `keep` becomes a loop.
// Ranks satisfy r'(A) = r(A & keep); used where several restrictions must
// share one ground set.
Matroid MaskOutside(const Matroid& m, ElementSet keep);

}  // namespace marena

#endif  // MATROID_ARENA_MATROID_H_
