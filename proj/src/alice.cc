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

#include "matroid_arena/alice.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <variant>

#include "matroid_arena/exchange.h"

namespace marena {

AliceState InitAlice(const Matroid& m, const Weighting& w,
                     const ListSizes& l) {
  CoverOrWitness start = CheckCanonicalColorable(m, w, l);
  if (auto* witness = std::get_if<DeficiencyWitness>(&start)) {
    throw NotColorableError(*witness);
  }
  AliceState state{m,
                   std::move(std::get<Cover>(start)),
                   w,
                   w,
                   l,
                   std::vector<std::vector<int>>(m.size()),
                   1};
  if (auto violation = FindStateViolation(state)) {
    throw ArenaError(ErrorCode::kInternalInfeasible, *violation);
  }
  return state;
}

StepResult InductiveStep(const Matroid& m, const Cover& cover,
                         const Weighting& w, ElementSet v) {
  if (!v.IsSubsetOf(m.ground())) {
    throw ArenaError(ErrorCode::kPreconditionViolated,
                     "revealed set leaves the ground set");
  }
  if (static_cast<int>(w.size()) != m.size() || !IsWCover(m, cover, w)) {
    throw ArenaError(ErrorCode::kPreconditionViolated,
                     "inductive step needs a w-cover");
  }
  const int k = cover.k();
  if (k == 0) return {ElementSet{}, cover};

  // `current` is the part at index i after receiving X_{i-1}; the revealed
  // elements it cannot keep are pushed one part up, and the exchange pulls
  // some of the next part down in return.
  std::vector<ElementSet> parts(k);
  ElementSet current = cover.parts[0];
  for (int i = 0; i + 1 < k; ++i) {
    const ElementSet next = cover.parts[i + 1];
    const ElementSet pushed = (v & current) - next;
    const ElementSet pulled = ExchangeSubsets(m, {current, next, pushed});
    parts[i] = (current - pushed) | pulled;
    current = (next - pulled) | pushed;
  }
  const ElementSet colored = v & current;
  parts[k - 1] = current - colored;

  StepResult step{colored, Cover{std::move(parts)}};
  if (auto violation = FindStepViolation(m, cover, w, v, step)) {
    throw ArenaError(ErrorCode::kInternalInfeasible, *violation);
  }
  return step;
}

std::optional<std::string> FindStepViolation(const Matroid& m,
                                             const Cover& cover,
                                             const Weighting& w, ElementSet v,
                                             const StepResult& step) {
  if (!step.colored.IsSubsetOf(v)) return "colored set is not inside V";
  if (!m.IsIndependent(step.colored)) return "colored set is dependent";
  if (step.new_cover.k() != cover.k()) return "cover changed its length";
  Weighting reduced = w;
  for (int e : step.colored) --reduced[e];
  if (!IsWCover(m, step.new_cover, reduced)) {
    return "new cover is not a (w - c_I)-cover";
  }
  for (int s = 0; s < step.new_cover.k(); ++s) {
    for (int e : step.new_cover.parts[s]) {
      const int shift = v.contains(e) ? 1 : 0;
      bool traced = false;
      for (int t = s + shift; t < cover.k() && !traced; ++t) {
        traced = cover.parts[t].contains(e);
      }
      if (!traced) {
        return "element " + std::to_string(e) + " in new part " +
               std::to_string(s + 1) + " has no old part at index >= " +
               std::to_string(s + 1 + shift);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> FindStateViolation(const AliceState& state) {
  const Matroid& m = state.matroid;
  const int n = m.size();
  if (!IsWCover(m, state.cover, state.residual_w)) {
    return "cover is not a residual_w-cover";
  }
  for (int e = 0; e < n; ++e) {
    if (state.residual_w[e] < 0 || state.residual_l[e] < state.residual_w[e]) {
      return "element " + std::to_string(e) +
             " violates residual_l >= residual_w >= 0";
    }
    if (static_cast<int>(state.assigned[e].size()) + state.residual_w[e] !=
        state.original_w[e]) {
      return "element " + std::to_string(e) + " lost track of its weight";
    }
  }
  for (int s = 0; s < state.cover.k(); ++s) {
    for (int e : state.cover.parts[s]) {
      if (s + 1 > state.residual_l[e]) {
        return "element " + std::to_string(e) + " sits in part " +
               std::to_string(s + 1) + " beyond its residual list";
      }
    }
  }
  return std::nullopt;
}

Response Respond(const AliceState& state, ElementSet v) {
  if (v.empty()) {
    throw ArenaError(ErrorCode::kIllegalMove, "Bob must reveal a non-empty set");
  }
  if (!v.IsSubsetOf(state.matroid.ground())) {
    throw ArenaError(ErrorCode::kIllegalMove,
                     "revealed set leaves the ground set");
  }
  for (int e : v) {
    if (state.residual_l[e] < 1) {
      throw ArenaError(ErrorCode::kIllegalMove,
                       "list of element " + std::to_string(e) + " is full");
    }
  }
  StepResult step =
      InductiveStep(state.matroid, state.cover, state.residual_w, v);

  AliceState next = state;
  next.cover = std::move(step.new_cover);
  for (int e : step.colored) {
    --next.residual_w[e];
    next.assigned[e].push_back(state.round);
  }
  for (int e : v) --next.residual_l[e];
  ++next.round;
  if (auto violation = FindStateViolation(next)) {
    throw ArenaError(ErrorCode::kInternalInfeasible, *violation);
  }
  return {step.colored, std::move(next)};
}

ColorLists OfflineListColor(const Matroid& m, const Weighting& w,
                            const ColorLists& lists) {
  const int n = m.size();
  if (static_cast<int>(lists.size()) != n) {
    throw ArenaError(ErrorCode::kSpecInvalid, "one list per element required");
  }
  ListSizes sizes(n);
  std::map<int, ElementSet> holders;  // color -> elements listing it
  for (int e = 0; e < n; ++e) {
    const std::set<int> distinct(lists[e].begin(), lists[e].end());
    if (distinct.size() != lists[e].size()) {
      throw ArenaError(ErrorCode::kSpecInvalid,
                       "list of element " + std::to_string(e) +
                           " repeats a color");
    }
    sizes[e] = static_cast<int>(lists[e].size());
    for (int c : lists[e]) holders[c].insert(e);
  }

  AliceState state = InitAlice(m, w, sizes);
  ColorLists chosen(n);
  for (const auto& [color, revealed] : holders) {
    Response response = Respond(state, revealed);
    for (int e : response.colored) chosen[e].push_back(color);
    state = std::move(response.next);
  }

  std::map<int, ElementSet> classes;
  for (int e = 0; e < n; ++e) {
    if (static_cast<int>(chosen[e].size()) != w[e]) {
      throw ArenaError(ErrorCode::kInternalInfeasible,
                       "element " + std::to_string(e) + " got " +
                           std::to_string(chosen[e].size()) + " colors");
    }
    for (int c : chosen[e]) classes[c].insert(e);
  }
  for (const auto& [color, members] : classes) {
    if (!m.IsIndependent(members)) {
      throw ArenaError(ErrorCode::kInternalInfeasible,
                       "color " + std::to_string(color) + " is dependent");
    }
  }
  return chosen;
}

}  // namespace marena
