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

// Spherical Bessel functions j_0..j_nmax at x >= 0, upward recurrence in the
// oscillatory regime and downward (Miller) recurrence where upward is
// unstable. Small arguments fall back to the power series.
std::vector<double> sph_bessel_array(int nmax, double x);

// j_n and j_n' for all orders 0..nmax. jp[n] = j_{n-1} - (n+1)/x * j_n,
// with the analytic x -> 0 limits (j_0' = 0, j_1' = 1/3, else 0).
void sph_bessel_array(int nmax, double x, std::vector<double>& j,
                      std::vector<double>& jp);

// Spherical Bessel of the second kind y_0..y_nmax (x > 0), upward recurrence
// (stable for y). Used by the rigid-sphere model via h = j - i y.
std::vector<double> sph_neumann_array(int nmax, double x);

// Legendre polynomials P_0..P_nmax at t in [-1, 1].
std::vector<double> legendre_array(int nmax, double t);

}  // namespace aural
