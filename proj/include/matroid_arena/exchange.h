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

#ifndef MATROID_ARENA_EXCHANGE_H_
#define MATROID_ARENA_EXCHANGE_H_

#include <vector>

#include "matroid_arena/element_set.h"
#include "matroid_arena/matroid.h"

namespace marena {

struct ExchangeRequest {
  ElementSet first;   // I1
  ElementSet second;  // I2
  ElementSet moved;   // X, a subset of I1
};

// Returns Y within I2 such that (I1 - X) + Y and (I2 - Y) + X are both
// independent. The common part I1 & I2 is contracted first and Y never meets
// it. Throws kPreconditionViolated on bad input; kInternalInfeasible means
// a defect, since such a Y always exists.
ElementSet ExchangeSubsets(const Matroid& m, const ExchangeRequest& request);

// Basis form: both results are bases and |Y| = |X|. Throws kNotABasis.
ElementSet MultipleBasisExchange(const Matroid& m, ElementSet b1,
                                 ElementSet b2, ElementSet x);

// Every valid Y, in ascending bitmask order. |I2| <= 16, otherwise
// kTooLarge.
std::vector<ElementSet> BruteForceExchange(const Matroid& m,
                                           const ExchangeRequest& request);

// The two independence conditions a returned Y must satisfy.
bool IsValidExchange(const Matroid& m, const ExchangeRequest& request,
                     ElementSet y);

}  // namespace marena

#endif  // MATROID_ARENA_EXCHANGE_H_
