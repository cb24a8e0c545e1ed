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

#include <cmath>

#include "aural/special.hpp"

using namespace aural;

TEST_CASE("spherical bessel against the standard library") {
  for (double x : {1e-3, 0.05, 0.3, 0.9, 2.0, 5.5, 12.0, 25.0, 39.7}) {
    const auto j = sph_bessel_array(24, x);
    for (int n = 0; n <= 24; ++n) {
      const double ref = std::sph_bessel(static_cast<unsigned>(n), x);
      const double scale = std::max(std::abs(ref), 1e-300);
      if (std::abs(ref) > 1e-280)
        CHECK(std::abs(j[static_cast<size_t>(n)] - ref) / scale < 1e-10);
    }
  }
}

TEST_CASE("small-argument limits") {
  const auto j0 = sph_bessel_array(6, 0.0);
  CHECK(j0[0] == 1.0);
  for (int n = 1; n <= 6; ++n) CHECK(j0[static_cast<size_t>(n)] == 0.0);

  std::vector<double> j, jp;
  sph_bessel_array(4, 0.0, j, jp);
  CHECK(jp[0] == 0.0);
  CHECK(jp[1] == doctest::Approx(1.0 / 3.0));
  CHECK(jp[2] == 0.0);
}

TEST_CASE("derivatives match central finite differences") {
  const double h = 1e-6;
  for (double x : {0.4, 1.7, 8.3, 21.0}) {
    std::vector<double> j, jp;
    sph_bessel_array(16, x, j, jp);
    const auto plus = sph_bessel_array(16, x + h);
    const auto minus = sph_bessel_array(16, x - h);
    for (int n = 0; n <= 16; ++n) {
      const double fd =
          (plus[static_cast<size_t>(n)] - minus[static_cast<size_t>(n)]) / (2 * h);
      CHECK(jp[static_cast<size_t>(n)] ==
            doctest::Approx(fd).epsilon(1e-6).scale(1e-8));
    }
  }
}

TEST_CASE("spherical neumann against the standard library") {
  for (double x : {0.2, 1.0, 4.0, 17.0}) {
    const auto y = sph_neumann_array(12, x);
    for (int n = 0; n <= 12; ++n) {
      const double ref = std::sph_neumann(static_cast<unsigned>(n), x);
      CHECK(y[static_cast<size_t>(n)] ==
            doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("legendre polynomials") {
  for (double t : {-0.99, -0.5, 0.0, 0.37, 1.0}) {
    const auto p = legendre_array(10, t);
    for (int n = 0; n <= 10; ++n)
      CHECK(p[static_cast<size_t>(n)] ==
            doctest::Approx(std::legendre(static_cast<unsigned>(n), t))
                .epsilon(1e-12));
  }
}
