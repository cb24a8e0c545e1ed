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
#include "aural/sht.hpp"

namespace aural {

// R = Rz(yaw) * Ry(pitch) * Rx(roll), right-handed, active.
Eigen::Matrix3d rotation_from_ypr(double yaw, double pitch, double roll);

// Real-SH rotation blocks (recurrence per order, orthogonal). The full
// (N+1)^2 square matrix satisfies Y(R u) = M Y(u) for every direction u,
// so coefficient vectors of a sound field rotate as a' = M a.
Eigen::MatrixXd sh_rotation_matrix(int order, const Eigen::Matrix3d& r);

// Rotates the sound field carried by an ambisonic signal.
ShSignal rotate_sh(const ShSignal& a, double yaw, double pitch, double roll);

}  // namespace aural
