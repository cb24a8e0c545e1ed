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

#include "aural/common.hpp"

namespace aural {

// Real spherical harmonics, ACN channel ordering, orthonormal (N3D)
// normalization: integral of Y_nm^2 over the sphere is 1, so
// Y_00 = 1/sqrt(4*pi). No Condon-Shortley phase.

inline int sh_channels(int order) { return (order + 1) * (order + 1); }
inline int acn_index(int n, int m) { return n * n + n + m; }

// Basis matrix, one row per direction, (N+1)^2 columns in ACN order.
Eigen::MatrixXd sh_basis(int order, const std::vector<Vec3>& directions);

// Single-direction evaluation.
void sh_eval(int order, const Vec3& direction, Eigen::VectorXd& y);

// Values plus the surface gradient on the unit sphere (Cartesian tangent
// vector per channel). Safe at the poles. The full spatial gradient of
// f(r) Y(x^) is f'(r) Y r^ + (f(r)/r) * this gradient.
void sh_eval_gradient(int order, const Vec3& direction, Eigen::VectorXd& y,
                      Eigen::Matrix<double, Eigen::Dynamic, 3>& grad);

// Deterministic near-uniform direction set (spherical Fibonacci spiral).
std::vector<Vec3> fibonacci_sphere(int count);

}  // namespace aural
