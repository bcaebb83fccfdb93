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

#ifndef MATROID_ARENA_CATALOG_H_
#define MATROID_ARENA_CATALOG_H_

#include <string>
#include <vector>

#include "matroid_arena/matroid.h"

namespace marena {

struct CatalogEntry {
  std::string name;
  MatroidSpec spec;
};

// Small named matroids used by the test suites, the CLI and the UI.
const std::vector<CatalogEntry>& Catalog();

// Throws kSpecInvalid for unknown names.
const MatroidSpec& CatalogSpec(const std::string& name);

// Complete graph on `vertices` vertices, edges in lexicographic order.
GraphicSpec CompleteGraph(int vertices);

}  // namespace marena

#endif  // MATROID_ARENA_CATALOG_H_
