/*
Copyright 2026 The Auralize Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <vector>

namespace aural {

// Precomputed unit node directions for spherical surface grids, one table
// per supported node count L = (N+2)^2, 0 <= N <= 28. Generated offline by
// tools/gen_sphere_grids.py.
struct SphereTable {
  int count;          // L
  int order;          // N with (N+2)^2 == L
  const double* xyz;  // count * 3 doubles, row-major unit vectors
};

const SphereTable* find_sphere_table(int node_count);
std::vector<int> sphere_table_counts();

}  // namespace aural
