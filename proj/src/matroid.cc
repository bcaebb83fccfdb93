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

#include "matroid_arena/matroid.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "matroid_arena/errors.h"

namespace marena {
namespace {

constexpr int kMaxExplicitElements = 20;
constexpr std::int64_t kMaxPrime = std::int64_t{1} << 31;

[[noreturn]] void Fail(ErrorCode code, const std::string& reason) {
  throw ArenaError(code, reason);
}

class UniformOracle : public IndependenceOracle {
 public:
  explicit UniformOracle(int r) : r_(r) {}
  bool IsIndependent(ElementSet s) const override { return s.size() <= r_; }

 private:
  int r_;
};

class PartitionOracle : public IndependenceOracle {
 public:
  PartitionOracle(std::vector<ElementSet> blocks, std::vector<int> capacities)
      : blocks_(std::move(blocks)), capacities_(std::move(capacities)) {}

  bool IsIndependent(ElementSet s) const override {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if ((s & blocks_[b]).size() > capacities_[b]) return false;
    }
    return true;
  }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
};

class GraphicOracle : public IndependenceOracle {
 public:
  GraphicOracle(int vertex_count, std::vector<std::pair<int, int>> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  // A forest iff no edge closes a cycle under union-find.
  bool IsIndependent(ElementSet s) const override {
    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (int e : s) {
      const int a = find(edges_[e].first);
      const int b = find(edges_[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

std::int64_t PowMod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

class LinearOracle : public IndependenceOracle {
 public:
  LinearOracle(std::int64_t prime, std::vector<std::vector<std::int64_t>> cols)
      : prime_(prime), columns_(std::move(cols)) {
    dimension_ = columns_.empty() ? 0 : static_cast<int>(columns_[0].size());
  }

  // Row-reduces the selected columns over GF(p); independent iff every
  // column yields a pivot.
  bool IsIndependent(ElementSet s) const override {
    if (s.size() > dimension_) return false;
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(s.size());
    for (int e : s) rows.push_back(columns_[e]);
    int pivot_row = 0;
    for (int col = 0; col < dimension_ && pivot_row < static_cast<int>(rows.size());
         ++col) {
      int found = -1;
      for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][col] != 0) {
          found = r;
          break;
        }
      }
      if (found < 0) continue;
      std::swap(rows[pivot_row], rows[found]);
      const std::int64_t inv = PowMod(rows[pivot_row][col], prime_ - 2, prime_);
      for (int r = pivot_row + 1; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][col] == 0) continue;
        const std::int64_t factor = rows[r][col] * inv % prime_;
        for (int c = col; c < dimension_; ++c) {
          rows[r][c] = (rows[r][c] - factor * rows[pivot_row][c]) % prime_;
          if (rows[r][c] < 0) rows[r][c] += prime_;
        }
      }
      ++pivot_row;
    }
    return pivot_row == static_cast<int>(rows.size());
  }

 private:
  std::int64_t prime_;
  std::vector<std::vector<std::int64_t>> columns_;
  int dimension_ = 0;
};

// The full family as a table indexed by bitmask.
class ExplicitOracle : public IndependenceOracle {
 public:
  explicit ExplicitOracle(std::vector<bool> table) : table_(std::move(table)) {}
  bool IsIndependent(ElementSet s) const override { return table_[s.bits()]; }

 private:
  std::vector<bool> table_;
};

class RestrictedOracle : public IndependenceOracle {
 public:
  RestrictedOracle(Matroid base, ElementMap map)
      : base_(std::move(base)), map_(std::move(map)) {}
  bool IsIndependent(ElementSet s) const override {
    return base_.IsIndependent(map_.ToParent(s));
  }

 private:
  Matroid base_;
  ElementMap map_;
};

class ContractedOracle : public IndependenceOracle {
 public:
  ContractedOracle(Matroid base, ElementMap map, ElementSet contracted)
      : base_(std::move(base)), map_(std::move(map)), contracted_(contracted) {}
  bool IsIndependent(ElementSet s) const override {
    return base_.IsIndependent(map_.ToParent(s) | contracted_);
  }

 private:
  Matroid base_;
  ElementMap map_;
  ElementSet contracted_;
};

class ClonedOracle : public IndependenceOracle {
 public:
  ClonedOracle(Matroid base, ElementMap map)
      : base_(std::move(base)), map_(std::move(map)) {}
  bool IsIndependent(ElementSet s) const override {
    ElementSet originals;
    for (int copy : s) {
      const int original = map_.to_parent[copy];
      if (originals.contains(original)) return false;
      originals.insert(original);
    }
    return base_.IsIndependent(originals);
  }

 private:
  Matroid base_;
  ElementMap map_;
};

class MaskedOracle : public IndependenceOracle {
 public:
  MaskedOracle(Matroid base, ElementSet keep)
      : base_(std::move(base)), keep_(keep) {}
  bool IsIndependent(ElementSet s) const override {
    return s.IsSubsetOf(keep_) && base_.IsIndependent(s);
  }

 private:
  Matroid base_;
  ElementSet keep_;
};

void CheckGroundSize(int n) {
  if (n < 0) Fail(ErrorCode::kSpecInvalid, "negative ground size");
  if (n > ElementSet::kMaxElements) {
    Fail(ErrorCode::kTooLarge, "ground set has " + std::to_string(n) +
                                   " elements; at most 64 supported");
  }
}

Matroid LoadUniform(const UniformSpec& spec) {
  CheckGroundSize(spec.n);
  if (spec.r < 0 || spec.r > spec.n) {
    Fail(ErrorCode::kSpecInvalid, "uniform rank must satisfy 0 <= r <= n");
  }
  if (spec.r == 0 && spec.n > 0) {
    Fail(ErrorCode::kLoopDetected, "uniform matroid of rank 0 has loops");
  }
  return Matroid(spec.n, std::make_shared<UniformOracle>(spec.r), spec);
}

Matroid LoadPartition(const PartitionSpec& spec) {
  if (spec.blocks.size() != spec.capacities.size()) {
    Fail(ErrorCode::kSpecInvalid, "one capacity per block required");
  }
  int n = 0;
  for (const auto& block : spec.blocks) n += static_cast<int>(block.size());
  CheckGroundSize(n);
  std::vector<ElementSet> blocks;
  ElementSet seen;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    if (spec.capacities[b] < 0) {
      Fail(ErrorCode::kSpecInvalid, "negative block capacity");
    }
    ElementSet block;
    for (int e : spec.blocks[b]) {
      if (e < 0 || e >= n) {
        Fail(ErrorCode::kSpecInvalid,
             "block element " + std::to_string(e) + " outside ground set");
      }
      if (seen.contains(e)) {
        Fail(ErrorCode::kSpecInvalid,
             "element " + std::to_string(e) + " appears in two blocks");
      }
      seen.insert(e);
      block.insert(e);
    }
    if (spec.capacities[b] == 0 && !block.empty()) {
      Fail(ErrorCode::kLoopDetected,
           "block " + std::to_string(b) + " has capacity 0");
    }
    blocks.push_back(block);
  }
  return Matroid(n, std::make_shared<PartitionOracle>(blocks, spec.capacities),
                 spec);
}

Matroid LoadGraphic(const GraphicSpec& spec) {
  const int n = static_cast<int>(spec.edges.size());
  CheckGroundSize(n);
  if (spec.vertex_count < 0) {
    Fail(ErrorCode::kSpecInvalid, "negative vertex count");
  }
  for (int i = 0; i < n; ++i) {
    const auto [a, b] = spec.edges[i];
    if (a < 0 || b < 0 || a >= spec.vertex_count || b >= spec.vertex_count) {
      Fail(ErrorCode::kSpecInvalid,
           "edge " + std::to_string(i) + " has an endpoint outside the graph");
    }
    if (a == b) {
      Fail(ErrorCode::kLoopDetected,
           "edge " + std::to_string(i) + " is a self-loop");
    }
  }
  return Matroid(n,
                 std::make_shared<GraphicOracle>(spec.vertex_count, spec.edges),
                 spec);
}

Matroid LoadLinear(const LinearSpec& spec) {
  const int n = static_cast<int>(spec.columns.size());
  CheckGroundSize(n);
  if (spec.prime >= kMaxPrime || !IsPrime(spec.prime)) {
    Fail(ErrorCode::kSpecInvalid, "field size must be a prime below 2^31");
  }
  for (int i = 0; i < n; ++i) {
    const auto& column = spec.columns[i];
    if (column.size() != spec.columns[0].size()) {
      Fail(ErrorCode::kSpecInvalid, "columns differ in dimension");
    }
    bool zero = true;
    for (std::int64_t x : column) {
      if (x < 0 || x >= spec.prime) {
        Fail(ErrorCode::kSpecInvalid, "column entry outside [0, p)");
      }
      zero = zero && x == 0;
    }
    if (zero) {
      Fail(ErrorCode::kLoopDetected,
           "column " + std::to_string(i) + " is zero");
    }
  }
  return Matroid(n, std::make_shared<LinearOracle>(spec.prime, spec.columns),
                 spec);
}

// Checks the local rank axioms on the rank function induced by the table:
// r(A) = r(A+e) = r(A+f) implies r(A+e+f) = r(A).
bool SatisfiesLocalRankAxiom(const std::vector<bool>& table, int n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> rank(count, 0);
  for (std::size_t a = 1; a < count; ++a) {
    if (table[a]) {
      rank[a] = static_cast<std::uint8_t>(ElementSet(a).size());
      continue;
    }
    std::uint8_t best = 0;
    for (int e : ElementSet(a)) {
      best = std::max(best, rank[a & ~(std::size_t{1} << e)]);
    }
    rank[a] = best;
  }
  for (std::size_t a = 0; a < count; ++a) {
    const ElementSet outside = ElementSet::Full(n) - ElementSet(a);
    for (int e : outside) {
      const std::size_t ae = a | (std::size_t{1} << e);
      if (rank[ae] != rank[a]) continue;
      for (int f : outside) {
        if (f <= e) continue;
        const std::size_t af = a | (std::size_t{1} << f);
        if (rank[af] == rank[a] && rank[ae | af] != rank[a]) return false;
      }
    }
  }
  return true;
}

Matroid LoadExplicit(const ExplicitSpec& spec) {
  CheckGroundSize(spec.n);
  if (spec.n > kMaxExplicitElements) {
    Fail(ErrorCode::kTooLarge, "explicit matroids are limited to 20 elements");
  }
  std::vector<bool> table(std::size_t{1} << spec.n, false);
  for (const auto& set : spec.independent_sets) {
    ElementSet s;
    for (int e : set) {
      if (e < 0 || e >= spec.n) {
        Fail(ErrorCode::kSpecInvalid,
             "independent set mentions element " + std::to_string(e));
      }
      if (s.contains(e)) {
        Fail(ErrorCode::kSpecInvalid, "independent set repeats an element");
      }
      s.insert(e);
    }
    table[s.bits()] = true;
  }
  if (!table[0]) {
    Fail(ErrorCode::kNotDownwardClosed, "family does not contain the empty set");
  }
  for (std::size_t a = 1; a < table.size(); ++a) {
    if (!table[a]) continue;
    for (int e : ElementSet(a)) {
      if (!table[a & ~(std::size_t{1} << e)]) {
        Fail(ErrorCode::kNotDownwardClosed,
             "family contains " + ElementSet(a).ToString() + " but not " +
                 (ElementSet(a) - ElementSet::Single(e)).ToString());
      }
    }
  }
  for (int e = 0; e < spec.n; ++e) {
    if (!table[std::size_t{1} << e]) {
      Fail(ErrorCode::kLoopDetected,
           "singleton {" + std::to_string(e) + "} is not independent");
    }
  }
  if (!SatisfiesLocalRankAxiom(table, spec.n)) {
    Fail(ErrorCode::kSpecInvalid, "family violates the exchange axiom");
  }
  return Matroid(spec.n, std::make_shared<ExplicitOracle>(std::move(table)),
                 spec);
}

}  // namespace

int SpecGroundSize(const MatroidSpec& spec) {
  struct Visitor {
    int operator()(const UniformSpec& s) const { return s.n; }
    int operator()(const PartitionSpec& s) const {
      int n = 0;
      for (const auto& b : s.blocks) n += static_cast<int>(b.size());
      return n;
    }
    int operator()(const GraphicSpec& s) const {
      return static_cast<int>(s.edges.size());
    }
    int operator()(const LinearSpec& s) const {
      return static_cast<int>(s.columns.size());
    }
    int operator()(const ExplicitSpec& s) const { return s.n; }
  };
  return std::visit(Visitor{}, spec);
}

Matroid::Matroid(int n, std::shared_ptr<const IndependenceOracle> oracle,
                 std::optional<MatroidSpec> spec)
    : n_(n), oracle_(std::move(oracle)), spec_(std::move(spec)) {}

void Matroid::CheckInGround(ElementSet s) const {
  if (!s.IsSubsetOf(ground())) {
    Fail(ErrorCode::kOutOfRange,
         "element " + std::to_string(s.bound() - 1) +
             " outside ground set of size " + std::to_string(n_));
  }
}

bool Matroid::IsIndependent(ElementSet s) const {
  CheckInGround(s);
  return oracle_->IsIndependent(s);
}

ElementSet Matroid::MaximalIndependentSubset(ElementSet s) const {
  CheckInGround(s);
  ElementSet chosen;
  for (int e : s) {
    ElementSet candidate = chosen;
    candidate.insert(e);
    if (oracle_->IsIndependent(candidate)) chosen = candidate;
  }
  return chosen;
}

int Matroid::Rank(ElementSet s) const {
  return MaximalIndependentSubset(s).size();
}

bool Matroid::IsBasis(ElementSet s) const {
  return IsIndependent(s) && s.size() == FullRank();
}

Matroid LoadMatroid(const MatroidSpec& spec) {
  struct Visitor {
    Matroid operator()(const UniformSpec& s) const { return LoadUniform(s); }
    Matroid operator()(const PartitionSpec& s) const {
      return LoadPartition(s);
    }
    Matroid operator()(const GraphicSpec& s) const { return LoadGraphic(s); }
    Matroid operator()(const LinearSpec& s) const { return LoadLinear(s); }
    Matroid operator()(const ExplicitSpec& s) const { return LoadExplicit(s); }
  };
  return std::visit(Visitor{}, spec);
}

ElementSet ElementMap::ToParent(ElementSet s) const {
  ElementSet out;
  for (int e : s) out.insert(to_parent[e]);
  return out;
}

ElementSet ElementMap::FromParent(ElementSet s) const {
  ElementSet out;
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
    if (s.contains(to_parent[i])) out.insert(i);
  }
  return out;
}

DerivedMatroid Restrict(const Matroid& m, ElementSet s) {
  m.CheckInGround(s);
  ElementMap map{s.ToVector()};
  Matroid derived(s.size(), std::make_shared<RestrictedOracle>(m, map));
  return {std::move(derived), std::move(map)};
}

DerivedMatroid Contract(const Matroid& m, ElementSet c) {
  if (!m.IsIndependent(c)) {
    Fail(ErrorCode::kDependentContraction,
         "cannot contract dependent set " + c.ToString());
  }
  const ElementSet rest = m.ground() - c;
  ElementMap map{rest.ToVector()};
  Matroid derived(rest.size(),
                  std::make_shared<ContractedOracle>(m, map, c));
  return {std::move(derived), std::move(map)};
}

DerivedMatroid CloneElements(const Matroid& m, std::span<const int> mult) {
  if (static_cast<int>(mult.size()) != m.size()) {
    Fail(ErrorCode::kSpecInvalid, "multiplicity vector has wrong length");
  }
  ElementMap map;
  for (int e = 0; e < m.size(); ++e) {
    if (mult[e] < 0) Fail(ErrorCode::kSpecInvalid, "negative multiplicity");
    for (int copy = 0; copy < mult[e]; ++copy) map.to_parent.push_back(e);
  }
  const int n = static_cast<int>(map.to_parent.size());
  if (n > ElementSet::kMaxElements) {
    Fail(ErrorCode::kTooLarge, "cloned ground set has " + std::to_string(n) +
                                   " elements; at most 64 supported");
  }
  Matroid derived(n, std::make_shared<ClonedOracle>(m, map));
  return {std::move(derived), std::move(map)};
}

Matroid MaskOutside(const Matroid& m, ElementSet keep) {
  m.CheckInGround(keep);
  return Matroid(m.size(), std::make_shared<MaskedOracle>(m, keep));
}

}  // namespace marena
