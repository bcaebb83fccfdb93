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

#include "matroid_arena/exchange.h"

#include <array>
#include <variant>

#include "matroid_arena/errors.h"
#include "matroid_arena/union.h"

namespace marena {
namespace {

constexpr int kBruteForceMaxSecond = 16;

void CheckRequest(const Matroid& m, const ExchangeRequest& request) {
  m.CheckInGround(request.first | request.second | request.moved);
  if (!m.IsIndependent(request.first) || !m.IsIndependent(request.second)) {
    throw ArenaError(ErrorCode::kPreconditionViolated,
                     "exchange needs two independent sets");
  }
  if (!request.moved.IsSubsetOf(request.first)) {
    throw ArenaError(ErrorCode::kPreconditionViolated,
                     "moved set " + request.moved.ToString() +
                         " is not inside " + request.first.ToString());
  }
}

}  // namespace

bool IsValidExchange(const Matroid& m, const ExchangeRequest& request,
                     ElementSet y) {
  if (!y.IsSubsetOf(request.second)) return false;
  return m.IsIndependent((request.first - request.moved) | y) &&
         m.IsIndependent((request.second - y) | request.moved);
}

ElementSet ExchangeSubsets(const Matroid& m, const ExchangeRequest& request) {
  CheckRequest(m, request);
  const ElementSet common = request.first & request.second;
  const ElementSet moved = request.moved - common;

  // Contract the common part, then restrict to the two sets; both steps
  // relabel, so translate through the composed map.
  const DerivedMatroid contracted = Contract(m, common);
  const ElementMap& outer = contracted.map;
  const ElementSet first = outer.FromParent(request.first - common);
  const ElementSet second = outer.FromParent(request.second - common);
  const ElementSet x = outer.FromParent(moved);

  const DerivedMatroid local = Restrict(contracted.matroid, first | second);
  const ElementMap& inner = local.map;
  const ElementSet local_first = inner.FromParent(first);
  const ElementSet local_second = inner.FromParent(second);
  const ElementSet local_x = inner.FromParent(x);

  // Part 0 receives X and part 1 receives I1 - X; each may also take
  // elements of I2.
  const std::array<Matroid, 2> sides = {
      MaskOutside(local.matroid, local_x | local_second),
      MaskOutside(local.matroid, (local_first - local_x) | local_second)};
  const CoverOrWitness result = UnionCover(sides);
  const Cover* cover = std::get_if<Cover>(&result);
  if (cover == nullptr) {
    throw ArenaError(ErrorCode::kInternalInfeasible,
                     "no cover for exchange of " + request.moved.ToString());
  }
  const ElementSet y_local = local_second & cover->parts[1];
  // Moved elements already in I2 trade with themselves.
  const ElementSet y =
      outer.ToParent(inner.ToParent(y_local)) | (request.moved & common);

  if (!IsValidExchange(m, request, y)) {
    throw ArenaError(ErrorCode::kInternalInfeasible,
                     "exchange result " + y.ToString() + " is not valid");
  }
  return y;
}

ElementSet MultipleBasisExchange(const Matroid& m, ElementSet b1,
                                 ElementSet b2, ElementSet x) {
  m.CheckInGround(b1 | b2 | x);
  if (!m.IsBasis(b1) || !m.IsBasis(b2)) {
    throw ArenaError(ErrorCode::kNotABasis,
                     "multiple basis exchange needs two bases");
  }
  const ElementSet y = ExchangeSubsets(m, {b1, b2, x});
  if (y.size() != x.size() || !m.IsBasis((b1 - x) | y) ||
      !m.IsBasis((b2 - y) | x)) {
    throw ArenaError(ErrorCode::kInternalInfeasible,
                     "basis exchange lost rank");
  }
  return y;
}

std::vector<ElementSet> BruteForceExchange(const Matroid& m,
                                           const ExchangeRequest& request) {
  CheckRequest(m, request);
  if (request.second.size() > kBruteForceMaxSecond) {
    throw ArenaError(ErrorCode::kTooLarge,
                     "brute-force exchange needs |I2| <= 16");
  }
  std::vector<ElementSet> valid;
  ForEachSubset(request.second, [&](ElementSet y) {
    if (IsValidExchange(m, request, y)) valid.push_back(y);
  });
  return valid;
}

}  // namespace marena
