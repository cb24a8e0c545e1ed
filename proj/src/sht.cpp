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

#include "aural/sht.hpp"

#include <cmath>

#include "aural/parallel.hpp"
#include "aural/special.hpp"

namespace aural {
namespace {

// Backward-stable SVD is required when the floor is low enough that tiny
// singular values must be inverted exactly; the normal-equation eigenvalue
// route is considerably faster and accurate enough for the moderate floors
// used in renderer design.
constexpr double kAccurateFloorRel = 1e-5;
constexpr int kAccurateSizeLimit = 96;

Eigen::MatrixXcd pinv_from_svd(const Eigen::MatrixXcd& u,
                               const Eigen::VectorXd& sigma,
                               const Eigen::MatrixXcd& v, double floor_rel) {
  const double smax = sigma.size() ? sigma.maxCoeff() : 0.0;
  const double floor = smax * floor_rel;
  Eigen::VectorXd inv(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double s = std::max(sigma(i), floor);
    inv(i) = (s > 0.0) ? 1.0 / s : 0.0;
  }
  return v * inv.asDiagonal() * u.adjoint();
}

}  // namespace

double RegProfile::dynamic_range_db(double f) const {
  if (f <= low_hz) return low_db;
  if (f >= high_hz) return high_db;
  const double t = std::log(f / low_hz) / std::log(high_hz / low_hz);
  return low_db + t * (high_db - low_db);
}

Eigen::MatrixXcd regularized_pinv(const Eigen::MatrixXcd& g,
                                  double dynamic_range_db) {
  const Eigen::Index rows = g.rows(), cols = g.cols();
  if (rows < cols)
    throw std::invalid_argument("regularized_pinv: requires rows >= cols");
  const double floor_rel = std::pow(10.0, -dynamic_range_db / 20.0);

  if (cols <= kAccurateSizeLimit || floor_rel < kAccurateFloorRel) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return pinv_from_svd(svd.matrixU(), svd.singularValues(), svd.matrixV(),
                         floor_rel);
  }

  // Normal-equation route: eigendecomposition of G^H G, left vectors by
  // explicit normalization of G V. Columns with zero norm contribute
  // nothing, which is the right answer for a floored inverse.
  const Eigen::MatrixXcd gram = g.adjoint() * g;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("regularized_pinv: eigendecomposition failed");
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  Eigen::MatrixXcd w = g * v;  // rows x cols
  Eigen::VectorXd sigma(cols);
  for (Eigen::Index i = 0; i < cols; ++i) {
    sigma(i) = w.col(i).norm();
    if (sigma(i) > 0.0) w.col(i) /= sigma(i);
  }
  return pinv_from_svd(w, sigma, v, floor_rel);
}

Eigen::MatrixXcd mode_response(const SamplingGrid& grid, int order, double k,
                               double c) {
  if (k < 0.0) throw std::invalid_argument("mode_response: k >= 0");
  (void)c;
  const int num_nodes = grid.count();
  const int channels = sh_channels(order);
  Eigen::MatrixXcd g(num_nodes, channels);

  std::vector<double> j, jp;
  Eigen::VectorXd y;
  Eigen::Matrix<double, Eigen::Dynamic, 3> grad;

  for (int l = 0; l < num_nodes; ++l) {
    const Vec3& x = grid.nodes[static_cast<size_t>(l)];
    const double r = x.norm();
    const Vec3 dir = (r > 0.0) ? Vec3(x / r) : Vec3(0.0, 0.0, 1.0);
    sph_bessel_array(order, k * r, j, jp);

    if (!grid.has_gradient) {
      sh_eval(order, dir, y);
      for (int n = 0; n <= order; ++n)
        for (int m = -n; m <= n; ++m)
          g(l, acn_index(n, m)) = j[static_cast<size_t>(n)] * y[acn_index(n, m)];
      continue;
    }

    sh_eval_gradient(order, dir, y, grad);
    const Vec3& nrm = grid.normals[static_cast<size_t>(l)];
    const double nr = nrm.dot(dir);
    for (int n = 0; n <= order; ++n) {
      const double jn = j[static_cast<size_t>(n)];
      const double jpn = jp[static_cast<size_t>(n)];
      for (int m = -n; m <= n; ++m) {
        const int ch = acn_index(n, m);
        Complex value(jn * y[ch], 0.0);
        if (k > 0.0) {
          // gamma * d/dn, gamma = 1/(ik):
          //   -i j_n'(kr) Y (n.r^) - i (j_n(kr)/(kr)) (n . grad_S Y)
          const double tangential = nrm.dot(grad.row(ch).transpose());
          double radial_term = jpn * y[ch] * nr;
          double trans_term = (k * r > 0.0) ? jn / (k * r) * tangential : 0.0;
          if (k * r == 0.0 && n == 1) {
            // j_1(x)/x -> 1/3: the transverse part survives at the origin,
            // but surface grids never contain it; keep the limit anyway.
            trans_term = tangential / 3.0;
          }
          value += Complex(0.0, -(radial_term + trans_term));
        }
        g(l, ch) = value;
      }
    }
  }
  return g;
}

DecompositionMatrix decomposition_matrix(const SamplingGrid& grid, int order,
                                         const std::vector<double>& freqs,
                                         const RegProfile& reg, double c) {
  if (sh_channels(order) > grid.count())
    throw std::invalid_argument(
        "decomposition_matrix: (N+1)^2 exceeds the node count");
  DecompositionMatrix d;
  d.order = order;
  d.freqs = freqs;
  d.reg = reg;
  d.bins.resize(freqs.size());
  parallel_for(static_cast<int>(freqs.size()), [&](int i) {
    const double f = freqs[static_cast<size_t>(i)];
    if (f < 0.0) throw std::invalid_argument("decomposition_matrix: f >= 0");
    const double k = kTwoPi * f / c;
    const Eigen::MatrixXcd g = mode_response(grid, order, k, c);
    d.bins[static_cast<size_t>(i)] = regularized_pinv(g, reg.dynamic_range_db(f));
  });
  return d;
}

ShSignal analyze(const NodeSignals& signals, const SamplingGrid& grid,
                 const DecompositionMatrix& d, double c) {
  if (signals.time_domain)
    throw std::invalid_argument("analyze: needs frequency-domain node signals");
  if (signals.channels() != grid.count())
    throw std::invalid_argument("analyze: channel count does not match grid");
  if (grid.has_gradient && signals.gradient_f.rows() != grid.count())
    throw std::invalid_argument(
        "analyze: surface grid requires gradient channels");
  const int bins = signals.bins();
  if (static_cast<size_t>(bins) != d.freqs.size())
    throw std::invalid_argument("analyze: bin axis does not match decomposition");
  for (int kbin = 0; kbin < bins; ++kbin) {
    const double f = kbin * signals.sample_rate / signals.nfft;
    if (std::abs(f - d.freqs[static_cast<size_t>(kbin)]) > 1e-6)
      throw std::invalid_argument("analyze: frequency axis mismatch");
  }

  ShSignal out;
  out.order = d.order;
  out.sample_rate = signals.sample_rate;
  out.time_domain = false;
  out.nfft = signals.nfft;
  out.coeff_f.resize(sh_channels(d.order), bins);

  parallel_for(bins, [&](int kbin) {
    Eigen::VectorXcd s(grid.count());
    const double omega = kTwoPi * d.freqs[static_cast<size_t>(kbin)];
    for (int l = 0; l < grid.count(); ++l) {
      if (grid.has_gradient && omega > 0.0)
        s(l) = cardioid_combine(signals.pressure_f(l, kbin),
                                signals.gradient_f(l, kbin), omega, c);
      else
        s(l) = signals.pressure_f(l, kbin);
    }
    out.coeff_f.col(kbin) = d.bins[static_cast<size_t>(kbin)] * s;
  });
  return out;
}

}  // namespace aural
