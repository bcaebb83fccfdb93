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

#include "matroid_arena/catalog.h"

#include "matroid_arena/errors.h"

namespace marena {

GraphicSpec CompleteGraph(int vertices) {
  GraphicSpec spec{vertices, {}};
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) spec.edges.emplace_back(a, b);
  }
  return spec;
}

const std::vector<CatalogEntry>& Catalog() {
  static const auto* catalog = new std::vector<CatalogEntry>{
      {"U1_2", UniformSpec{2, 1}},
      {"U1_3", UniformSpec{3, 1}},
      {"U2_3", UniformSpec{3, 2}},
      {"U2_4", UniformSpec{4, 2}},
      {"U3_6", UniformSpec{6, 3}},
      {"K3", CompleteGraph(3)},
      {"K4", CompleteGraph(4)},
      {"K5", CompleteGraph(5)},
      // K4 with edge 01 doubled.
      {"K4_plus", GraphicSpec{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                  {2, 3}, {0, 1}}}},
      {"partition5", PartitionSpec{{{0, 1, 2}, {3, 4}}, {1, 2}}},
      {"partition7", PartitionSpec{{{0, 1}, {2, 3, 4}, {5, 6}}, {1, 2, 2}}},
      {"gf2_5", LinearSpec{2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                               {1, 1, 1}}}},
      // Fano plane: all nonzero vectors of GF(2)^3.
      {"fano", LinearSpec{2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                              {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}}},
      {"gf3_6", LinearSpec{3, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2},
                               {0, 2}}}},
      {"explicit3", ExplicitSpec{3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}}}},
  };
  return *catalog;
}

const MatroidSpec& CatalogSpec(const std::string& name) {
  for (const CatalogEntry& entry : Catalog()) {
    if (entry.name == name) return entry.spec;
  }
  throw ArenaError(ErrorCode::kSpecInvalid, "no catalog matroid '" + name + "'");
}

}  // namespace marena
