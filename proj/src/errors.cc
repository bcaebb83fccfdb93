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

#include "matroid_arena/errors.h"

#include "matroid_arena/element_set.h"

namespace marena {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSpecInvalid:
      return "SpecInvalid";
    case ErrorCode::kLoopDetected:
      return "LoopDetected";
    case ErrorCode::kNotDownwardClosed:
      return "NotDownwardClosed";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kDependentContraction:
      return "DependentContraction";
    case ErrorCode::kMismatchedGroundSets:
      return "MismatchedGroundSets";
    case ErrorCode::kInconsistentInput:
      return "InconsistentInput";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kInternalInfeasible:
      return "InternalInfeasible";
    case ErrorCode::kNotABasis:
      return "NotABasis";
    case ErrorCode::kNotColorable:
      return "NotColorable";
    case ErrorCode::kIllegalMove:
      return "IllegalMove";
    case ErrorCode::kWrongPhase:
      return "WrongPhase";
  }
  return "Unknown";
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace marena
