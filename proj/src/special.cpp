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

#include "aural/special.hpp"

#include <cmath>

namespace aural {
namespace {

// Power series j_n(x) = x^n / (2n+1)!! * (1 - (x^2/2)/(1!(2n+3)) + ...),
// accurate for x^2 < ~n. Underflows to zero for large n, which is the
// correct rounded value.
double sph_bessel_series(int n, double x) {
  double dfact = 1.0;  // (2n+1)!!
  for (int k = 1; k <= n; ++k) dfact *= 2.0 * k + 1.0;
  double lead = 1.0;
  for (int k = 0; k < n; ++k) {
    lead *= x;
    if (lead == 0.0) return 0.0;
  }
  lead /= dfact;
  const double x2h = 0.5 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 40; ++k) {
    term *= -x2h / (k * (2.0 * (n + k) + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return lead * sum;
}

}  // namespace

std::vector<double> sph_bessel_array(int nmax, double x) {
  std::vector<double> j(static_cast<size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  const double j0 = std::sin(x) / x;
  if (nmax == 0) {
    j[0] = j0;
    return j;
  }
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (x > static_cast<double>(nmax)) {
    // Upward recurrence, stable while n < x.
    j[0] = j0;
    j[1] = j1;
    for (int n = 2; n <= nmax; ++n)
      j[n] = (2.0 * n - 1.0) / x * j[n - 1] - j[n - 2];
    return j;
  }
  if (x < 0.1) {
    for (int n = 0; n <= nmax; ++n) j[n] = sph_bessel_series(n, x);
    return j;
  }
  // Miller downward recurrence from a padded start order, normalized to j0.
  const int start = nmax + 16 + static_cast<int>(std::ceil(1.5 * x));
  double fp = 0.0;           // f_{n+1}
  double fc = 1e-280;        // f_n
  std::vector<double> tmp(static_cast<size_t>(nmax) + 1, 0.0);
  for (int n = start; n >= 0; --n) {
    const double fm = (2.0 * n + 3.0) / x * fc - fp;
    fp = fc;
    fc = fm;
    if (n <= nmax) tmp[n] = fm;
    // Rescale to avoid overflow during the climb down.
    if (std::abs(fc) > 1e250) {
      fp *= 1e-250;
      fc *= 1e-250;
      for (auto& v : tmp) v *= 1e-250;
    }
  }
  const double scale = j0 / tmp[0];
  for (int n = 0; n <= nmax; ++n) j[n] = tmp[n] * scale;
  return j;
}

void sph_bessel_array(int nmax, double x, std::vector<double>& j,
                      std::vector<double>& jp) {
  j = sph_bessel_array(nmax, x);
  jp.assign(static_cast<size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    if (nmax >= 1) jp[1] = 1.0 / 3.0;
    return;
  }
  jp[0] = (nmax >= 1) ? -j[1] : (std::cos(x) / x - std::sin(x) / (x * x));
  for (int n = 1; n <= nmax; ++n) jp[n] = j[n - 1] - (n + 1.0) / x * j[n];
}

std::vector<double> sph_neumann_array(int nmax, double x) {
  if (x <= 0.0) throw std::invalid_argument("sph_neumann_array: x must be > 0");
  std::vector<double> y(static_cast<size_t>(nmax) + 1);
  y[0] = -std::cos(x) / x;
  if (nmax == 0) return y;
  y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
  for (int n = 2; n <= nmax; ++n) {
    y[n] = (2.0 * n - 1.0) / x * y[n - 1] - y[n - 2];
    if (std::isinf(y[n])) {
      for (int m = n; m <= nmax; ++m) y[m] = y[n];
      break;
    }
  }
  return y;
}

std::vector<double> legendre_array(int nmax, double t) {
  std::vector<double> p(static_cast<size_t>(nmax) + 1);
  p[0] = 1.0;
  if (nmax == 0) return p;
  p[1] = t;
  for (int n = 2; n <= nmax; ++n)
    p[n] = ((2.0 * n - 1.0) * t * p[n - 1] - (n - 1.0) * p[n - 2]) / n;
  return p;
}

}  // namespace aural
