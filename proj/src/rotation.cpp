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

#include "aural/rotation.hpp"

#include <cmath>

namespace aural {
namespace {

// Ivanic & Ruedenberg recurrence for real-SH rotation blocks (with the
// published errata applied). Block entries are indexed by (m', m) offsets.

struct BlockView {
  const Eigen::MatrixXd& mat;
  int order;
  double operator()(int mp, int m) const { return mat(order + mp, order + m); }
};

double p_func(const Eigen::Matrix3d& r1, const BlockView& prev, int i, int l,
              int a, int b) {
  // r1 is indexed by SH order-1 offsets (-1, 0, 1) mapped to rows/cols 0..2.
  auto r = [&r1](int m, int n) { return r1(m + 1, n + 1); };
  if (b == l) return r(i, 1) * prev(a, l - 1) - r(i, -1) * prev(a, -l + 1);
  if (b == -l) return r(i, 1) * prev(a, -l + 1) + r(i, -1) * prev(a, l - 1);
  return r(i, 0) * prev(a, b);
}

Eigen::MatrixXd next_block(const Eigen::Matrix3d& r1,
                           const Eigen::MatrixXd& prev_block, int l) {
  BlockView prev{prev_block, l - 1};
  Eigen::MatrixXd out(2 * l + 1, 2 * l + 1);
  for (int mp = -l; mp <= l; ++mp) {
    for (int m = -l; m <= l; ++m) {
      const double denom = (std::abs(m) == l)
                               ? static_cast<double>(2 * l) * (2 * l - 1)
                               : static_cast<double>(l + m) * (l - m);
      const double u = std::sqrt(static_cast<double>(l + mp) * (l - mp) / denom);
      const double v =
          0.5 *
          std::sqrt((1.0 + (mp == 0 ? 1.0 : 0.0)) *
                    static_cast<double>(l + std::abs(mp) - 1) *
                    (l + std::abs(mp)) / denom) *
          (1.0 - 2.0 * (mp == 0 ? 1.0 : 0.0));
      const double w = -0.5 *
                       std::sqrt(static_cast<double>(l - std::abs(mp) - 1) *
                                 (l - std::abs(mp)) / denom) *
                       (1.0 - (mp == 0 ? 1.0 : 0.0));

      double acc = 0.0;
      if (u != 0.0) acc += u * p_func(r1, prev, 0, l, mp, m);
      if (v != 0.0) {
        double vterm;
        if (mp == 0) {
          vterm = p_func(r1, prev, 1, l, 1, m) + p_func(r1, prev, -1, l, -1, m);
        } else if (mp > 0) {
          vterm = p_func(r1, prev, 1, l, mp - 1, m) *
                      std::sqrt(1.0 + (mp == 1 ? 1.0 : 0.0)) -
                  p_func(r1, prev, -1, l, -mp + 1, m) * (mp == 1 ? 0.0 : 1.0);
        } else {
          vterm = p_func(r1, prev, 1, l, mp + 1, m) * (mp == -1 ? 0.0 : 1.0) +
                  p_func(r1, prev, -1, l, -mp - 1, m) *
                      std::sqrt(1.0 + (mp == -1 ? 1.0 : 0.0));
        }
        acc += v * vterm;
      }
      if (w != 0.0) {
        double wterm;
        if (mp > 0) {
          wterm = p_func(r1, prev, 1, l, mp + 1, m) +
                  p_func(r1, prev, -1, l, -mp - 1, m);
        } else {
          wterm = p_func(r1, prev, 1, l, mp - 1, m) -
                  p_func(r1, prev, -1, l, -mp + 1, m);
        }
        acc += w * wterm;
      }
      out(l + mp, l + m) = acc;
    }
  }
  return out;
}

}  // namespace

Eigen::Matrix3d rotation_from_ypr(double yaw, double pitch, double roll) {
  return (Eigen::AngleAxisd(yaw, Vec3::UnitZ()) *
          Eigen::AngleAxisd(pitch, Vec3::UnitY()) *
          Eigen::AngleAxisd(roll, Vec3::UnitX()))
      .toRotationMatrix();
}

Eigen::MatrixXd sh_rotation_matrix(int order, const Eigen::Matrix3d& r) {
  const int channels = sh_channels(order);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(channels, channels);
  out(0, 0) = 1.0;
  if (order == 0) return out;

  // Order-1 block in ACN order (m = -1, 0, 1) corresponds to (y, z, x).
  Eigen::Matrix3d r1;
  const int map[3] = {1, 2, 0};  // SH offset -> Cartesian axis
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r1(i, j) = r(map[i], map[j]);
  out.block(1, 1, 3, 3) = r1;

  Eigen::MatrixXd prev = r1;
  for (int l = 2; l <= order; ++l) {
    Eigen::MatrixXd block = next_block(r1, prev, l);
    out.block(l * l, l * l, 2 * l + 1, 2 * l + 1) = block;
    prev = std::move(block);
  }
  return out;
}

ShSignal rotate_sh(const ShSignal& a, double yaw, double pitch, double roll) {
  const Eigen::MatrixXd m =
      sh_rotation_matrix(a.order, rotation_from_ypr(yaw, pitch, roll));
  ShSignal out = a;
  if (a.time_domain)
    out.coeff_t = m * a.coeff_t;
  else
    out.coeff_f = m * a.coeff_f;
  return out;
}

}  // namespace aural
