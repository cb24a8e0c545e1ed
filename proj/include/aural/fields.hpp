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

#include "aural/common.hpp"
#include "aural/grid.hpp"

namespace aural {

// Sign conventions, fixed once for the whole codebase: time dependence
// e^{+i w t}, plane-wave kernel e^{-i k_pw . x} with k_pw = (w/c) d and
// d = -u the propagation direction (u is where the sound arrives from).
// All gradient and velocity signs derive from this pair.

struct PlaneWaveSpec {
  Vec3 incidence = Vec3(1.0, 0.0, 0.0);  // unit, arrival direction
  double amplitude = 1.0;
};

// Multichannel data sampled at grid nodes, time domain (L x T real) or
// half-spectrum frequency domain (L x K complex, K = nfft/2 + 1).
struct NodeSignals {
  double sample_rate = 0.0;
  int predelay_samples = 0;
  bool has_gradient = false;
  bool time_domain = true;
  int nfft = 0;  // frequency-domain payloads: transform size

  Eigen::MatrixXd pressure_t;   // L x T
  Eigen::MatrixXd gradient_t;   // L x T
  Eigen::MatrixXcd pressure_f;  // L x K
  Eigen::MatrixXcd gradient_f;  // L x K

  int channels() const {
    return static_cast<int>(time_domain ? pressure_t.rows() : pressure_f.rows());
  }
  int length() const { return static_cast<int>(pressure_t.cols()); }
  int bins() const { return static_cast<int>(pressure_f.cols()); }
};

// Causal global predelay covering every node of a grid of the given size.
int default_predelay_samples(double size_m, double sample_rate,
                             double c = kSpeedOfSound);

// Frequency-domain plane-wave snapshot on the grid; bin k sits at
// k * fs / nfft with nfft = 2 (n_bins - 1). Bin 0 takes the w -> 0 limit
// (pressure = amplitude, gradient = 0). predelay < 0 picks the default.
NodeSignals plane_wave_bins(const PlaneWaveSpec& spec, const SamplingGrid& grid,
                            double sample_rate, int n_bins, int predelay = -1,
                            double c = kSpeedOfSound);

// Time-domain realization (inverse real transform of plane_wave_bins):
// band-limited impulses with exact spectral fractional delays.
NodeSignals plane_wave_ir(const PlaneWaveSpec& spec, const SamplingGrid& grid,
                          double sample_rate, int length, int predelay = -1,
                          double c = kSpeedOfSound);

// Cardioid virtual sensor: p + gamma dp/dn with gamma = c / (i w).
Complex cardioid_combine(Complex pressure, Complex dpdn, double omega,
                         double c = kSpeedOfSound);

// Normal pressure gradient from normal particle velocity (Euler's equation
// under the e^{+iwt} convention): -i w rho0 v_n.
Complex velocity_to_gradient(Complex v_n, double omega,
                             double rho0 = kAirDensity);

// Two-layer finite difference, estimate valid at the midpoint between the
// layers. spacing_ok reports the lambda/10 rule at the top of the band.
struct DoubleLayerGradient {
  Eigen::MatrixXcd gradient;
  bool spacing_ok = true;
  double max_spacing_m = 0.0;  // lambda_min / 10
};

DoubleLayerGradient gradient_from_double_layer(const Eigen::MatrixXcd& p_outer,
                                               const Eigen::MatrixXcd& p_inner,
                                               double spacing_m, double f_max,
                                               double c = kSpeedOfSound);

}  // namespace aural
