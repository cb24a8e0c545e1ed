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

#include "aural/fields.hpp"

#include <cmath>

#include "aural/fft.hpp"

namespace aural {
namespace {

void check_incidence(const PlaneWaveSpec& spec) {
  if (std::abs(spec.incidence.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("plane wave: incidence vector must be unit length");
}

}  // namespace

int default_predelay_samples(double size_m, double sample_rate, double c) {
  return static_cast<int>(std::ceil(sample_rate * (0.5 * size_m + 0.001) / c));
}

NodeSignals plane_wave_bins(const PlaneWaveSpec& spec, const SamplingGrid& grid,
                            double sample_rate, int n_bins, int predelay,
                            double c) {
  check_incidence(spec);
  if (n_bins < 2) throw std::invalid_argument("plane_wave_bins: n_bins >= 2");
  if (predelay < 0) predelay = default_predelay_samples(grid.size_m, sample_rate, c);

  const int nfft = 2 * (n_bins - 1);
  const double tau0 = predelay / sample_rate;
  const int num_nodes = grid.count();
  const Vec3 u = spec.incidence;

  NodeSignals out;
  out.sample_rate = sample_rate;
  out.predelay_samples = predelay;
  out.has_gradient = grid.has_gradient;
  out.time_domain = false;
  out.nfft = nfft;
  out.pressure_f.resize(num_nodes, n_bins);
  if (grid.has_gradient) out.gradient_f.resize(num_nodes, n_bins);

  for (int l = 0; l < num_nodes; ++l) {
    const Vec3& x = grid.nodes[static_cast<size_t>(l)];
    // Per-node delay relative to the origin: tau0 - u.x / c.
    const double tau = tau0 - u.dot(x) / c;
    const double un = grid.has_gradient
                          ? u.dot(grid.normals[static_cast<size_t>(l)])
                          : 0.0;
    out.pressure_f(l, 0) = Complex(spec.amplitude, 0.0);
    if (grid.has_gradient) out.gradient_f(l, 0) = Complex(0.0, 0.0);
    for (int k = 1; k < n_bins; ++k) {
      const double omega = kTwoPi * k * sample_rate / nfft;
      const Complex p = spec.amplitude * std::exp(Complex(0.0, -omega * tau));
      out.pressure_f(l, k) = p;
      // dp/dn = -i |k_pw| (d . n) p = +i (w/c) (u . n) p  with d = -u.
      if (grid.has_gradient)
        out.gradient_f(l, k) = Complex(0.0, omega / c * un) * p;
    }
  }
  return out;
}

NodeSignals plane_wave_ir(const PlaneWaveSpec& spec, const SamplingGrid& grid,
                          double sample_rate, int length, int predelay,
                          double c) {
  if (predelay < 0) predelay = default_predelay_samples(grid.size_m, sample_rate, c);
  if (length < 2 * predelay)
    throw std::invalid_argument(
        "plane_wave_ir: length too short for the predelay (time aliasing)");
  const int nfft = next_fft_size(length);
  NodeSignals bins = plane_wave_bins(spec, grid, sample_rate, rfft_bins(nfft),
                                     predelay, c);
  NodeSignals out;
  out.sample_rate = sample_rate;
  out.predelay_samples = predelay;
  out.has_gradient = grid.has_gradient;
  out.time_domain = true;
  out.pressure_t = irfft_rows(bins.pressure_f, nfft).leftCols(length);
  if (grid.has_gradient)
    out.gradient_t = irfft_rows(bins.gradient_f, nfft).leftCols(length);
  return out;
}

Complex cardioid_combine(Complex pressure, Complex dpdn, double omega, double c) {
  if (!(omega > 0.0))
    throw std::invalid_argument("cardioid_combine: omega must be > 0");
  // gamma = 1 / (i w / c) = -i c / w
  return pressure + Complex(0.0, -c / omega) * dpdn;
}

Complex velocity_to_gradient(Complex v_n, double omega, double rho0) {
  if (omega < 0.0) throw std::invalid_argument("velocity_to_gradient: omega >= 0");
  return Complex(0.0, -omega * rho0) * v_n;
}

DoubleLayerGradient gradient_from_double_layer(const Eigen::MatrixXcd& p_outer,
                                               const Eigen::MatrixXcd& p_inner,
                                               double spacing_m, double f_max,
                                               double c) {
  if (!(spacing_m > 0.0))
    throw std::invalid_argument("gradient_from_double_layer: spacing must be > 0");
  if (p_outer.rows() != p_inner.rows() || p_outer.cols() != p_inner.cols())
    throw std::invalid_argument("gradient_from_double_layer: shape mismatch");
  DoubleLayerGradient out;
  out.gradient = (p_outer - p_inner) / spacing_m;
  out.max_spacing_m = (f_max > 0.0) ? c / f_max / 10.0 : 0.0;
  out.spacing_ok = f_max <= 0.0 || spacing_m < out.max_spacing_m;
  return out;
}

}  // namespace aural
