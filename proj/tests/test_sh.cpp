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

#include "aural/sh.hpp"
#include "aural/sphere_tables.hpp"

using namespace aural;

namespace {

std::vector<Vec3> random_directions(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(count));
  while (static_cast<int>(dirs.size()) < count) {
    Vec3 v(dist(rng), dist(rng), dist(rng));
    if (v.norm() > 1e-3) dirs.push_back(v.normalized());
  }
  return dirs;
}

std::vector<Vec3> table_directions(int node_count) {
  const SphereTable* t = find_sphere_table(node_count);
  REQUIRE(t != nullptr);
  std::vector<Vec3> dirs;
  for (int i = 0; i < t->count; ++i)
    dirs.emplace_back(t->xyz[3 * i], t->xyz[3 * i + 1], t->xyz[3 * i + 2]);
  return dirs;
}

}  // namespace

TEST_CASE("Y00 is the constant mode") {
  for (const auto& u : random_directions(5, 1)) {
    Eigen::VectorXd y;
    sh_eval(0, u, y);
    CHECK(y(0) == doctest::Approx(0.28209479177387814).epsilon(1e-14));
  }
}

TEST_CASE("first-order channels are sqrt(3/4pi) * (y, z, x)") {
  const double c = std::sqrt(3.0 / (4.0 * kPi));
  for (const auto& u : random_directions(8, 2)) {
    Eigen::VectorXd y;
    sh_eval(1, u, y);
    CHECK(y(acn_index(1, -1)) == doctest::Approx(c * u.y()).epsilon(1e-13));
    CHECK(y(acn_index(1, 0)) == doctest::Approx(c * u.z()).epsilon(1e-13));
    CHECK(y(acn_index(1, 1)) == doctest::Approx(c * u.x()).epsilon(1e-13));
  }
}

TEST_CASE("antipodal parity Y(-u) = (-1)^n Y(u) up to n = 8") {
  for (const auto& u : random_directions(10, 3)) {
    Eigen::VectorXd y, ym;
    sh_eval(8, u, y);
    sh_eval(8, -u, ym);
    for (int n = 0; n <= 8; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      for (int m = -n; m <= n; ++m) {
        const int ch = acn_index(n, m);
        CHECK(ym(ch) == doctest::Approx(sign * y(ch)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("gram matrix on a shipped 20-design is the identity") {
  // Products of two order-10 harmonics have degree <= 20, which the
  // L = 484 table integrates exactly with equal weights.
  const auto dirs = table_directions(484);
  const Eigen::MatrixXd y = sh_basis(10, dirs);
  const Eigen::MatrixXd gram =
      (4.0 * kPi / static_cast<double>(dirs.size())) * y.transpose() * y;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
  CHECK((gram - eye).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("surface gradient matches finite differences, poles included") {
  std::vector<Vec3> dirs = random_directions(20, 4);
  dirs.emplace_back(0.0, 0.0, 1.0);
  dirs.emplace_back(0.0, 0.0, -1.0);
  dirs.push_back(Vec3(1e-9, 0.0, 1.0).normalized());

  const int order = 9;
  const double h = 1e-6;
  for (const auto& u : dirs) {
    Eigen::VectorXd y;
    Eigen::Matrix<double, Eigen::Dynamic, 3> grad;
    sh_eval_gradient(order, u, y, grad);

    // Two tangent directions.
    const Vec3 any = (std::abs(u.z()) < 0.9) ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
    const Vec3 e1 = u.cross(any).normalized();
    const Vec3 e2 = u.cross(e1).normalized();
    for (const Vec3& e : {e1, e2}) {
      Eigen::VectorXd yp, ym;
      sh_eval(order, (u + h * e).normalized(), yp);
      sh_eval(order, (u - h * e).normalized(), ym);
      const Eigen::VectorXd fd = (yp - ym) / (2.0 * h);
      const Eigen::VectorXd an = grad * e;
      CHECK((fd - an).cwiseAbs().maxCoeff() < 5e-5);
    }
  }
}

TEST_CASE("fibonacci directions are unit and distinct") {
  const auto dirs = fibonacci_sphere(500);
  REQUIRE(dirs.size() == 500);
  for (const auto& d : dirs) CHECK(std::abs(d.norm() - 1.0) < 1e-14);
  double min_dot = 1.0;
  for (size_t i = 1; i < dirs.size(); ++i)
    min_dot = std::min(min_dot, dirs[i - 1].dot(dirs[i]));
  CHECK(min_dot < 1.0 - 1e-6);
}

TEST_CASE("all shipped tables carry consistent metadata") {
  const auto counts = sphere_table_counts();
  REQUIRE(counts.size() == 29);
  for (int count : counts) {
    const SphereTable* t = find_sphere_table(count);
    REQUIRE(t != nullptr);
    CHECK((t->order + 2) * (t->order + 2) == t->count);
    for (int i = 0; i < t->count; ++i) {
      const Vec3 v(t->xyz[3 * i], t->xyz[3 * i + 1], t->xyz[3 * i + 2]);
      CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    }
  }
  CHECK(find_sphere_table(26) == nullptr);
}
