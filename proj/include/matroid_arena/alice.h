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

#ifndef MATROID_ARENA_ALICE_H_
#define MATROID_ARENA_ALICE_H_

#include <optional>
#include <string>
#include <vector>

#include "matroid_arena/element_set.h"
#include "matroid_arena/errors.h"
#include "matroid_arena/matroid.h"
#include "matroid_arena/union.h"

namespace marena {

// Raised when the canonical lists {1..l(e)} admit no w-coloring; in that
// case no on-line strategy exists either.
class NotColorableError : public ArenaError {
 public:
  explicit NotColorableError(DeficiencyWitness witness)
      : ArenaError(ErrorCode::kNotColorable,
                   "not colorable: demand " + std::to_string(witness.demand) +
                       " exceeds supply " + std::to_string(witness.supply) +
                       " on " + witness.set.ToString()),
        witness_(witness) {}

  const DeficiencyWitness& witness() const { return witness_; }

 private:
  DeficiencyWitness witness_;
};

// The on-line strategy's private position. The cover is a residual_w-cover
// whose part s only holds elements e with s <= residual_l(e).
struct AliceState {
  Matroid matroid;
  Cover cover;
  Weighting original_w;
  Weighting residual_w;
  ListSizes residual_l;
  // Colors given to each element so far, ascending.
  std::vector<std::vector<int>> assigned;
  // Color revealed by the next Bob move.
  int round = 1;
};

struct StepResult {
  ElementSet colored;  // I, independent and inside V
  Cover new_cover;
};

// Builds the starting witness cover; throws NotColorableError.
AliceState InitAlice(const Matroid& m, const Weighting& w, const ListSizes& l);

// One cover update for a revealed set V. The new cover is a (w - c_I)-cover,
// and e in part s of it implies e was in some part t >= s + c_V(e) of the
// old cover. Both facts are re-checked before returning.
StepResult InductiveStep(const Matroid& m, const Cover& cover,
                         const Weighting& w, ElementSet v);

// Empty when the two conditions hold, otherwise a description of the first
// violation.
std::optional<std::string> FindStepViolation(const Matroid& m,
                                             const Cover& cover,
                                             const Weighting& w, ElementSet v,
                                             const StepResult& step);

// Empty when all AliceState invariants hold.
std::optional<std::string> FindStateViolation(const AliceState& state);

struct Response {
  ElementSet colored;
  AliceState next;
};

// Alice's answer to Bob revealing color state.round on V. Throws
// kIllegalMove when V is empty or some list in V is already full.
Response Respond(const AliceState& state, ElementSet v);

using ColorLists = std::vector<std::vector<int>>;

// Picks W(e), a w(e)-subset of lists[e], so that every color class is
// independent, by replaying the lists color by color through Respond.
// Throws NotColorableError when the canonical lists of the same sizes fail.
ColorLists OfflineListColor(const Matroid& m, const Weighting& w,
                            const ColorLists& lists);

}  // namespace marena

#endif  // MATROID_ARENA_ALICE_H_
