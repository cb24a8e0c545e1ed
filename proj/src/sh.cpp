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

#include "aural/sh.hpp"

#include <cmath>

namespace aural {
namespace {

constexpr double kInvSqrt4Pi = 0.28209479177387814;  // 1/sqrt(4*pi)
constexpr double kSqrt2 = 1.4142135623730951;

struct Angles {
  double t;   // cos(theta) = z
  double s;   // sin(theta) >= 0
  double cp;  // cos(phi)
  double sp;  // sin(phi)
};

Angles split_direction(const Vec3& u) {
  Angles a;
  a.t = u.z();
  a.s = std::hypot(u.x(), u.y());
  if (a.s > 0.0) {
    a.cp = u.x() / a.s;
    a.sp = u.y() / a.s;
  } else {
    a.cp = 1.0;  // pole: pick the phi = 0 meridian
    a.sp = 0.0;
  }
  return a;
}

// Normalized associated Legendre values Pbar_n^m(cos theta) for all
// n <= order, m <= n, packed by m-major column: idx(n, m) = m*(2*order+3-m)/2
// + (n - m). Derivative and sin-divided tables are propagated through the
// same recurrences, which keeps them exact at the poles.
inline int pack_index(int order, int n, int m) {
  return m * (2 * order + 3 - m) / 2 + (n - m);
}

// Tables: P (values), optionally D (d/d theta) and Q (P/sin theta for m>=1;
// Q entries for m = 0 are unused).
void legendre_tables(int order, double t, double s, std::vector<double>& P,
                     std::vector<double>* D, std::vector<double>* Q) {
  const int size = (order + 1) * (order + 2) / 2;
  P.assign(size, 0.0);
  if (D) D->assign(size, 0.0);
  if (Q) Q->assign(size, 0.0);

  auto idx = [order](int n, int m) { return pack_index(order, n, m); };

  P[idx(0, 0)] = kInvSqrt4Pi;
  if (D) (*D)[idx(0, 0)] = 0.0;

  // Diagonal: Pbar_m^m = f_m * s * Pbar_{m-1}^{m-1}, f_m = sqrt((2m+1)/(2m)).
  for (int m = 1; m <= order; ++m) {
    const double f = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    const int cur = idx(m, m), prev = idx(m - 1, m - 1);
    P[cur] = f * s * P[prev];
    if (D) (*D)[cur] = f * (s * (*D)[prev] + t * P[prev]);
    if (Q) {
      if (m == 1)
        (*Q)[cur] = f * P[prev];
      else
        (*Q)[cur] = f * s * (*Q)[idx(m - 1, m - 1)];
    }
  }
  // First off-diagonal: Pbar_{m+1}^m = g_m * t * Pbar_m^m.
  for (int m = 0; m < order; ++m) {
    const double g = std::sqrt(2.0 * m + 3.0);
    const int cur = idx(m + 1, m), prev = idx(m, m);
    P[cur] = g * t * P[prev];
    if (D) (*D)[cur] = g * (t * (*D)[prev] - s * P[prev]);
    if (Q && m >= 1) (*Q)[cur] = g * t * (*Q)[prev];
  }
  // Remaining rows.
  for (int m = 0; m <= order; ++m) {
    for (int n = m + 2; n <= order; ++n) {
      const double a =
          std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - m * m));
      const double b = std::sqrt(
          ((static_cast<double>(n - 1) * (n - 1)) - m * m) /
          (4.0 * static_cast<double>(n - 1) * (n - 1) - 1.0));
      const int cur = idx(n, m), p1 = idx(n - 1, m), p2 = idx(n - 2, m);
      P[cur] = a * (t * P[p1] - b * P[p2]);
      if (D) (*D)[cur] = a * (t * (*D)[p1] - s * P[p1] - b * (*D)[p2]);
      if (Q && m >= 1) (*Q)[cur] = a * (t * (*Q)[p1] - b * (*Q)[p2]);
    }
  }
}

// cos(m phi), sin(m phi) for m = 0..order via the angle-addition recurrence.
void azimuth_tables(int order, double cp, double sp, std::vector<double>& cm,
                    std::vector<double>& sm) {
  cm.assign(order + 1, 0.0);
  sm.assign(order + 1, 0.0);
  cm[0] = 1.0;
  for (int m = 1; m <= order; ++m) {
    cm[m] = cm[m - 1] * cp - sm[m - 1] * sp;
    sm[m] = sm[m - 1] * cp + cm[m - 1] * sp;
  }
}

}  // namespace

void sh_eval(int order, const Vec3& u, Eigen::VectorXd& y) {
  const Angles a = split_direction(u);
  std::vector<double> P;
  legendre_tables(order, a.t, a.s, P, nullptr, nullptr);
  std::vector<double> cm, sm;
  azimuth_tables(order, a.cp, a.sp, cm, sm);

  y.resize(sh_channels(order));
  for (int n = 0; n <= order; ++n) {
    y[acn_index(n, 0)] = P[pack_index(order, n, 0)];
    for (int m = 1; m <= n; ++m) {
      const double p = kSqrt2 * P[pack_index(order, n, m)];
      y[acn_index(n, m)] = p * cm[m];
      y[acn_index(n, -m)] = p * sm[m];
    }
  }
}

Eigen::MatrixXd sh_basis(int order, const std::vector<Vec3>& directions) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(directions.size()),
                      sh_channels(order));
  Eigen::VectorXd y;
  for (size_t q = 0; q < directions.size(); ++q) {
    sh_eval(order, directions[q], y);
    out.row(static_cast<Eigen::Index>(q)) = y.transpose();
  }
  return out;
}

void sh_eval_gradient(int order, const Vec3& u, Eigen::VectorXd& y,
                      Eigen::Matrix<double, Eigen::Dynamic, 3>& grad) {
  const Angles a = split_direction(u);
  std::vector<double> P, D, Q;
  legendre_tables(order, a.t, a.s, P, &D, &Q);
  std::vector<double> cm, sm;
  azimuth_tables(order, a.cp, a.sp, cm, sm);

  const Vec3 theta_hat(a.t * a.cp, a.t * a.sp, -a.s);
  const Vec3 phi_hat(-a.sp, a.cp, 0.0);

  const int channels = sh_channels(order);
  y.resize(channels);
  grad.resize(channels, 3);
  for (int n = 0; n <= order; ++n) {
    {
      const int pi = pack_index(order, n, 0);
      y[acn_index(n, 0)] = P[pi];
      grad.row(acn_index(n, 0)) = (D[pi] * theta_hat).transpose();
    }
    for (int m = 1; m <= n; ++m) {
      const int pi = pack_index(order, n, m);
      const double p = kSqrt2 * P[pi];
      const double dth = kSqrt2 * D[pi];
      const double q = kSqrt2 * m * Q[pi];  // m * Pbar / sin(theta)
      y[acn_index(n, m)] = p * cm[m];
      y[acn_index(n, -m)] = p * sm[m];
      grad.row(acn_index(n, m)) =
          (dth * cm[m] * theta_hat - q * sm[m] * phi_hat).transpose();
      grad.row(acn_index(n, -m)) =
          (dth * sm[m] * theta_hat + q * cm[m] * phi_hat).transpose();
    }
  }
}

std::vector<Vec3> fibonacci_sphere(int count) {
  if (count < 1) throw std::invalid_argument("fibonacci_sphere: count >= 1");
  std::vector<Vec3> dirs(static_cast<size_t>(count));
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs[static_cast<size_t>(i)] = Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

}  // namespace aural
