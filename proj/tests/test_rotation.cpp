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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aural/rotation.hpp"
#include "aural/sh.hpp"

using namespace aural;

namespace {

Eigen::Matrix3d random_rotation(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  return rotation_from_ypr(angle(rng), 0.5 * angle(rng), angle(rng));
}

Vec3 random_direction(std::mt19937& rng) {
  std::normal_distribution<double> dist;
  Vec3 v;
  do {
    v = Vec3(dist(rng), dist(rng), dist(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

}  // namespace

TEST_CASE("identity rotation gives the identity matrix") {
  const Eigen::MatrixXd m =
      sh_rotation_matrix(6, Eigen::Matrix3d::Identity());
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(49, 49);
  CHECK((m - eye).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("equivariance: M Y(u) == Y(R u)") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Matrix3d r = random_rotation(rng);
    const Eigen::MatrixXd m = sh_rotation_matrix(10, r);
    const Vec3 u = random_direction(rng);
    Eigen::VectorXd y, y_rot;
    sh_eval(10, u, y);
    sh_eval(10, (r * u).eval(), y_rot);
    CHECK((m * y - y_rot).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("blocks are orthogonal for N = 20 over random rotations") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXd m = sh_rotation_matrix(20, random_rotation(rng));
    const Eigen::MatrixXd gram = m.transpose() * m;
    const Eigen::MatrixXd eye =
        Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    CHECK((gram - eye).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("composition: M(R1 R2) == M(R1) M(R2)") {
  std::mt19937 rng(31);
  const Eigen::Matrix3d r1 = random_rotation(rng);
  const Eigen::Matrix3d r2 = random_rotation(rng);
  const Eigen::MatrixXd lhs = sh_rotation_matrix(8, (r1 * r2).eval());
  const Eigen::MatrixXd rhs =
      sh_rotation_matrix(8, r1) * sh_rotation_matrix(8, r2);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rotate_sh identity and full-turn yaw") {
  ShSignal a;
  a.order = 5;
  a.sample_rate = 48000.0;
  a.time_domain = false;
  a.nfft = 64;
  std::mt19937 rng(5);
  std::normal_distribution<double> dist;
  a.coeff_f.resize(36, 4);
  for (int i = 0; i < 36; ++i)
    for (int j = 0; j < 4; ++j) a.coeff_f(i, j) = Complex(dist(rng), dist(rng));

  const ShSignal ident = rotate_sh(a, 0.0, 0.0, 0.0);
  CHECK((ident.coeff_f - a.coeff_f).cwiseAbs().maxCoeff() < 1e-15);

  const ShSignal turn = rotate_sh(a, kTwoPi, 0.0, 0.0);
  CHECK((turn.coeff_f - a.coeff_f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("yaw rotates a plane-wave coefficient pattern") {
  // Coefficients proportional to Y(u) must map to Y(Rz u).
  const Vec3 u = Vec3(1.0, 0.0, 0.0);
  Eigen::VectorXd y;
  sh_eval(4, u, y);
  ShSignal a;
  a.order = 4;
  a.sample_rate = 48000.0;
  a.time_domain = false;
  a.nfft = 8;
  a.coeff_f = y.cast<Complex>();
  const ShSignal rotated = rotate_sh(a, deg2rad(90.0), 0.0, 0.0);
  Eigen::VectorXd y_left;
  sh_eval(4, Vec3(0.0, 1.0, 0.0), y_left);
  CHECK((rotated.coeff_f.col(0) - y_left.cast<Complex>()).cwiseAbs().maxCoeff() <
        1e-12);
}
