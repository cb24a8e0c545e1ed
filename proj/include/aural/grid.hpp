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

#include <string>
#include <vector>

#include "aural/common.hpp"

namespace aural {

enum class GridFamily { CubicalVolume, CubicalSurface, SphericalSurface };

std::string to_string(GridFamily family);
GridFamily grid_family_from_string(const std::string& name);

// A virtual sampling grid: node positions in meters, origin-centered, with
// outward unit normals for the surface families.
struct SamplingGrid {
  GridFamily family = GridFamily::CubicalVolume;
  std::vector<Vec3> nodes;
  std::vector<Vec3> normals;  // present iff surface family
  double size_m = 0.0;        // edge length (cubes) or diameter (sphere)
  int max_order = 0;
  bool has_gradient = false;

  int count() const { return static_cast<int>(nodes.size()); }
  double radius_m() const { return 0.5 * size_m; }

  // Checks every structural invariant (bounds, unit outward normals,
  // distinct nodes, family node-count formula). Throws DataError.
  void validate() const;
};

// Regular m x m x m lattice spanning [-size/2, +size/2] per axis.
SamplingGrid make_cubical_volume(int m, double size_m);

// Boundary shell of the m^3 lattice: 6m^2 - 12m + 8 nodes with outward
// normals (face normals; edge/corner nodes get the normalized sum of the
// adjacent face normals).
SamplingGrid make_cubical_surface(int m, double size_m);

// Spherical surface grid from the shipped tables; node_count must be
// (N+2)^2 for a shipped N. Normals point radially outward.
SamplingGrid make_spherical_surface(int node_count, double size_m);

// f_a = N c / (2 pi R).
double aliasing_frequency(int order, double radius_m, double c = kSpeedOfSound);

// Maximum usable SH order. Spherical grids: N from (N+2)^2 = L. Cubical
// grids: documented lookup {27, 216 -> 7; 1000, 2197 -> 20; 98 -> 7;
// 488 -> 17}, otherwise the largest N with (N+1)^2 <= L whose decomposition
// matrix at f_a(N) keeps its condition number below cond_limit.
int default_max_order(const SamplingGrid& grid, double cond_limit = 1e4,
                      double c = kSpeedOfSound);

// Grid description file (UTF-8 JSON, 17 significant digits). The reader
// validates all invariants.
void save_grid(const SamplingGrid& grid, const std::string& path);
SamplingGrid load_grid(const std::string& path);

// Lattice m for a requested node count; throws DataError when the count is
// not m^3 (volume) / 6m^2-12m+8 (surface) for an integer m >= 2.
int cubical_volume_m_from_count(int node_count);
int cubical_surface_m_from_count(int node_count);

}  // namespace aural
