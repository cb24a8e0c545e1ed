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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace aural {

using Vec3 = Eigen::Vector3d;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Propagation defaults; both configurable wherever they enter a formula.
inline constexpr double kSpeedOfSound = 343.0;     // m/s
inline constexpr double kAirDensity = 1.204;       // kg/m^3

// Malformed or inconsistent data (bad files, invalid arguments at data level).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Cross-artifact consistency violations (e.g. grid fingerprint mismatch).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Unit direction from azimuth (counterclockwise from +x, radians) and
// elevation (up from the horizontal plane). Front = +x, left = +y, up = +z.
inline Vec3 direction_from_angles(double azimuth, double elevation) {
  const double ce = std::cos(elevation);
  return Vec3(ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation));
}

inline double amp_db(double a) { return 20.0 * std::log10(a); }
inline double db_amp(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace aural
