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

#ifndef MATROID_ARENA_ERRORS_H_
#define MATROID_ARENA_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace marena {

enum class ErrorCode {
  kSpecInvalid,
  kLoopDetected,
  kNotDownwardClosed,
  kOutOfRange,
  kDependentContraction,
  kMismatchedGroundSets,
  kInconsistentInput,
  kTooLarge,
  kPreconditionViolated,
  kInternalInfeasible,
  kNotABasis,
  kNotColorable,
  kIllegalMove,
  kWrongPhase,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message is the human-readable reason.
class ArenaError : public std::runtime_error {
 public:
  ArenaError(ErrorCode code, const std::string& reason)
      : std::runtime_error(reason), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorCodeName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace marena

#endif  // MATROID_ARENA_ERRORS_H_
