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

#include "aural/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aural/sht.hpp"
#include "aural/sphere_tables.hpp"

namespace aural {
namespace {

constexpr double kBoundsTol = 1e-12;
constexpr double kNormalTol = 1e-12;
constexpr double kMinNodeDistance = 1e-9;

std::vector<double> lattice_positions(int m, double size_m) {
  std::vector<double> pos(static_cast<size_t>(m));
  const double step = size_m / (m - 1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(i)] = -0.5 * size_m + i * step;
  return pos;
}

void check_lattice_args(int m, double size_m, const char* who) {
  if (m < 2) throw DataError(std::string(who) + ": lattice requires m >= 2");
  if (!(size_m > 0.0)) throw DataError(std::string(who) + ": size_m must be > 0");
}

// Documented Table-style order lookup for the cubical families.
bool cubical_order_lookup(GridFamily family, int count, int* order) {
  if (family == GridFamily::CubicalVolume) {
    switch (count) {
      case 27:
      case 216: *order = 7; return true;
      case 1000:
      case 2197: *order = 20; return true;
      default: return false;
    }
  }
  if (family == GridFamily::CubicalSurface) {
    switch (count) {
      case 98: *order = 7; return true;
      case 488: *order = 17; return true;
      default: return false;
    }
  }
  return false;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(GridFamily family) {
  switch (family) {
    case GridFamily::CubicalVolume: return "cubical_volume";
    case GridFamily::CubicalSurface: return "cubical_surface";
    case GridFamily::SphericalSurface: return "spherical_surface";
  }
  return "unknown";
}

GridFamily grid_family_from_string(const std::string& name) {
  if (name == "cubical_volume") return GridFamily::CubicalVolume;
  if (name == "cubical_surface") return GridFamily::CubicalSurface;
  if (name == "spherical_surface") return GridFamily::SphericalSurface;
  throw DataError("unknown grid family: " + name);
}

void SamplingGrid::validate() const {
  const int n = count();
  if (n < 1) throw DataError("grid: empty node list");
  const bool surface = family != GridFamily::CubicalVolume;
  if (surface != has_gradient)
    throw DataError("grid: has_gradient inconsistent with family");
  if (surface && static_cast<int>(normals.size()) != n)
    throw DataError("grid: normals missing or wrong count");
  if (!surface && !normals.empty())
    throw DataError("grid: volumetric grid must not carry normals");
  if (!(size_m > 0.0)) throw DataError("grid: size_m must be > 0");

  const double half = 0.5 * size_m;
  for (int i = 0; i < n; ++i) {
    const Vec3& p = nodes[static_cast<size_t>(i)];
    if (!p.allFinite()) throw DataError("grid: non-finite node position");
    if (family == GridFamily::SphericalSurface) {
      if (std::abs(p.norm() - half) > kBoundsTol)
        throw DataError("grid: spherical node off the sphere surface");
    } else {
      if (p.cwiseAbs().maxCoeff() > half + kBoundsTol)
        throw DataError("grid: node outside the bounding cube");
    }
    if (surface) {
      const Vec3& nrm = normals[static_cast<size_t>(i)];
      if (std::abs(nrm.norm() - 1.0) > kNormalTol)
        throw DataError("grid: non-unit normal");
      if (p.dot(nrm) <= 0.0)
        throw DataError("grid: normal not pointing away from the origin");
    }
  }
  // Pairwise distinctness.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)]).norm() <
          kMinNodeDistance)
        throw DataError("grid: coincident nodes");

  // Family node-count formula.
  switch (family) {
    case GridFamily::CubicalVolume:
      cubical_volume_m_from_count(n);
      break;
    case GridFamily::CubicalSurface:
      cubical_surface_m_from_count(n);
      break;
    case GridFamily::SphericalSurface: {
      const int root = static_cast<int>(std::lround(std::sqrt(double(n))));
      if (root * root != n || root < 2)
        throw DataError("grid: spherical node count is not (N+2)^2");
      if ((max_order + 2) * (max_order + 2) != n)
        throw DataError("grid: declared max_order inconsistent with node count");
      break;
    }
  }
}

SamplingGrid make_cubical_volume(int m, double size_m) {
  check_lattice_args(m, size_m, "make_cubical_volume");
  SamplingGrid g;
  g.family = GridFamily::CubicalVolume;
  g.size_m = size_m;
  g.has_gradient = false;
  const auto pos = lattice_positions(m, size_m);
  g.nodes.reserve(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        g.nodes.emplace_back(pos[i], pos[j], pos[k]);
  g.max_order = default_max_order(g);
  return g;
}

SamplingGrid make_cubical_surface(int m, double size_m) {
  check_lattice_args(m, size_m, "make_cubical_surface");
  SamplingGrid g;
  g.family = GridFamily::CubicalSurface;
  g.size_m = size_m;
  g.has_gradient = true;
  const auto pos = lattice_positions(m, size_m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const bool on_hull = i == 0 || i == m - 1 || j == 0 || j == m - 1 ||
                             k == 0 || k == m - 1;
        if (!on_hull) continue;
        g.nodes.emplace_back(pos[i], pos[j], pos[k]);
        Vec3 nrm(0.0, 0.0, 0.0);
        if (i == 0) nrm.x() -= 1.0;
        if (i == m - 1) nrm.x() += 1.0;
        if (j == 0) nrm.y() -= 1.0;
        if (j == m - 1) nrm.y() += 1.0;
        if (k == 0) nrm.z() -= 1.0;
        if (k == m - 1) nrm.z() += 1.0;
        g.normals.push_back(nrm.normalized());
      }
  g.max_order = default_max_order(g);
  return g;
}

SamplingGrid make_spherical_surface(int node_count, double size_m) {
  if (!(size_m > 0.0))
    throw DataError("make_spherical_surface: size_m must be > 0");
  const int root = static_cast<int>(std::lround(std::sqrt(double(node_count))));
  if (root * root != node_count || root < 2)
    throw DataError("make_spherical_surface: node count " +
                    std::to_string(node_count) + " is not (N+2)^2");
  const SphereTable* table = find_sphere_table(node_count);
  if (!table)
    throw DataError("make_spherical_surface: no shipped node table for L = " +
                    std::to_string(node_count));
  SamplingGrid g;
  g.family = GridFamily::SphericalSurface;
  g.size_m = size_m;
  g.has_gradient = true;
  g.max_order = table->order;
  const double radius = 0.5 * size_m;
  g.nodes.reserve(static_cast<size_t>(node_count));
  g.normals.reserve(static_cast<size_t>(node_count));
  for (int i = 0; i < node_count; ++i) {
    const Vec3 dir(table->xyz[3 * i], table->xyz[3 * i + 1], table->xyz[3 * i + 2]);
    g.nodes.push_back(radius * dir);
    g.normals.push_back(dir);
  }
  return g;
}

double aliasing_frequency(int order, double radius_m, double c) {
  if (order < 0) throw std::invalid_argument("aliasing_frequency: order >= 0");
  if (!(radius_m > 0.0)) throw std::invalid_argument("aliasing_frequency: R > 0");
  if (!(c > 0.0)) throw std::invalid_argument("aliasing_frequency: c > 0");
  return order * c / (kTwoPi * radius_m);
}

int default_max_order(const SamplingGrid& grid, double cond_limit, double c) {
  if (grid.family == GridFamily::SphericalSurface) {
    const int root = static_cast<int>(std::lround(std::sqrt(double(grid.count()))));
    return root - 2;
  }
  int order = 0;
  if (cubical_order_lookup(grid.family, grid.count(), &order)) return order;

  // Fallback: largest order with (N+1)^2 <= L whose decomposition stays
  // well conditioned at its own aliasing frequency (kR = N).
  const int n_max =
      static_cast<int>(std::floor(std::sqrt(double(grid.count())))) - 1;
  for (int n = n_max; n >= 1; --n) {
    const double k = aliasing_frequency(n, grid.radius_m(), c) * kTwoPi / c;
    const Eigen::MatrixXcd g = mode_response(grid, n, k, c);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0.0 && sv(0) / sv(sv.size() - 1) < cond_limit)
      return n;
  }
  return 0;
}

int cubical_volume_m_from_count(int node_count) {
  const int m = static_cast<int>(std::lround(std::cbrt(double(node_count))));
  if (m < 2 || m * m * m != node_count)
    throw DataError("node count " + std::to_string(node_count) +
                    " is not m^3 for integer m >= 2");
  return m;
}

int cubical_surface_m_from_count(int node_count) {
  // 6m^2 - 12m + 8 = L  =>  m = 1 + sqrt((L - 2) / 6)
  const double root = std::sqrt((node_count - 2) / 6.0);
  const int m = static_cast<int>(std::lround(1.0 + root));
  if (m < 2 || 6 * m * m - 12 * m + 8 != node_count)
    throw DataError("node count " + std::to_string(node_count) +
                    " is not 6m^2-12m+8 for integer m >= 2");
  return m;
}

void save_grid(const SamplingGrid& grid, const std::string& path) {
  grid.validate();
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"auralize-grid\",\n";
  os << "  \"version\": 1,\n";
  os << "  \"family\": \"" << to_string(grid.family) << "\",\n";
  os << "  \"size_m\": " << format_double(grid.size_m) << ",\n";
  os << "  \"max_order\": " << grid.max_order << ",\n";
  auto write_vectors = [&os](const std::vector<Vec3>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
      os << "    [" << format_double(vs[i].x()) << ", " << format_double(vs[i].y())
         << ", " << format_double(vs[i].z()) << "]";
      os << (i + 1 < vs.size() ? ",\n" : "\n");
    }
  };
  os << "  \"nodes\": [\n";
  write_vectors(grid.nodes);
  os << "  ]";
  if (!grid.normals.empty()) {
    os << ",\n  \"normals\": [\n";
    write_vectors(grid.normals);
    os << "  ]";
  }
  os << "\n}\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot open grid file for writing: " + path);
  f << os.str();
  if (!f) throw DataError("failed writing grid file: " + path);
}

SamplingGrid load_grid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot open grid file: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw DataError("grid file " + path + ": " + e.what());
  }
  SamplingGrid g;
  try {
    if (j.at("format") != "auralize-grid")
      throw DataError("not an auralize grid file");
    g.family = grid_family_from_string(j.at("family").get<std::string>());
    g.size_m = j.at("size_m").get<double>();
    g.max_order = j.at("max_order").get<int>();
    g.has_gradient = g.family != GridFamily::CubicalVolume;
    for (const auto& row : j.at("nodes"))
      g.nodes.emplace_back(row.at(0).get<double>(), row.at(1).get<double>(),
                           row.at(2).get<double>());
    if (j.contains("normals"))
      for (const auto& row : j.at("normals"))
        g.normals.emplace_back(row.at(0).get<double>(), row.at(1).get<double>(),
                               row.at(2).get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw DataError("grid file " + path + ": " + e.what());
  }
  g.validate();
  return g;
}

}  // namespace aural
