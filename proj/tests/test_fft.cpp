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

#include "aural/fft.hpp"

using namespace aural;

TEST_CASE("rfft of a delta is flat") {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(16);
  x(0) = 1.0;
  const Eigen::VectorXcd s = rfft(x, 16);
  REQUIRE(s.size() == 9);
  for (int k = 0; k < 9; ++k) {
    CHECK(s(k).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(s(k).imag()) < 1e-14);
  }
}

TEST_CASE("irfft(rfft(x)) == x for random signals and odd lengths") {
  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  for (int n : {8, 64, 130, 1024}) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = dist(rng);
    const Eigen::VectorXd back = irfft(rfft(x, n), n);
    CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("parseval") {
  std::mt19937 rng(3);
  std::normal_distribution<double> dist;
  const int n = 256;
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = dist(rng);
  const Eigen::VectorXcd s = rfft(x, n);
  double spec_energy = std::norm(s(0)) + std::norm(s(n / 2));
  for (int k = 1; k < n / 2; ++k) spec_energy += 2.0 * std::norm(s(k));
  CHECK(spec_energy / n == doctest::Approx(x.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("row-wise transforms match per-row calls") {
  std::mt19937 rng(11);
  std::normal_distribution<double> dist;
  Eigen::MatrixXd x(3, 32);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 32; ++c) x(r, c) = dist(rng);
  const Eigen::MatrixXcd s = rfft_rows(x, 32);
  for (int r = 0; r < 3; ++r) {
    const Eigen::VectorXcd ref = rfft(x.row(r).transpose(), 32);
    CHECK((s.row(r).transpose() - ref).cwiseAbs().maxCoeff() < 1e-13);
  }
  const Eigen::MatrixXd back = irfft_rows(s, 32);
  CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)rfft(Eigen::VectorXd::Zero(4), 3), std::invalid_argument);
  CHECK_THROWS_AS((void)irfft(Eigen::VectorXcd::Zero(4), 8), std::invalid_argument);
}
