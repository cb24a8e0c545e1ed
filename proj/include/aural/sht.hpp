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
#include "aural/fields.hpp"
#include "aural/grid.hpp"
#include "aural/sh.hpp"

namespace aural {

// Frequency-dependent dynamic-range limit for the singular values of the
// decomposition, in dB. Constant below low_hz and above high_hz, linear in
// log-frequency in between. Values stem from design-time tuning and are
// exposed on every container that embeds them.
struct RegProfile {
  double low_db = 20.0;
  double low_hz = 200.0;
  double high_db = 60.0;
  double high_hz = 2000.0;

  double dynamic_range_db(double f) const;
};

// Regularized pseudoinverse: singular values below
// sigma_max * 10^(-dynamic_range_db/20) are raised to that floor before
// inversion. Requires rows >= cols.
Eigen::MatrixXcd regularized_pinv(const Eigen::MatrixXcd& g,
                                  double dynamic_range_db);

// Node responses to unit-coefficient interior basis fields j_n(kr) Y_nm.
// Volumetric grids: pressure response. Surface grids: cardioid response
// (pressure + gamma * normal derivative, gamma = 1/(ik)); on spheres this
// reduces to [j_n(kR) - i j_n'(kR)] Y_nm. k = 0 takes the small-argument
// limits with zero gradient weight. Shape: L x (N+1)^2.
Eigen::MatrixXcd mode_response(const SamplingGrid& grid, int order, double k,
                               double c = kSpeedOfSound);

struct DecompositionMatrix {
  int order = 0;
  std::vector<double> freqs;
  std::vector<Eigen::MatrixXcd> bins;  // per bin, (N+1)^2 x L
  RegProfile reg;
};

// Per-bin regularized inversion of the mode responses. Rejects
// (N+1)^2 > L. Bins are built in parallel.
DecompositionMatrix decomposition_matrix(const SamplingGrid& grid, int order,
                                         const std::vector<double>& freqs,
                                         const RegProfile& reg,
                                         double c = kSpeedOfSound);

// Ambisonic signal: (N+1)^2 channels, ACN order, N3D normalization.
struct ShSignal {
  int order = 0;
  double sample_rate = 0.0;
  bool time_domain = false;
  int nfft = 0;
  Eigen::MatrixXd coeff_t;   // M x T
  Eigen::MatrixXcd coeff_f;  // M x K

  int channels() const { return sh_channels(order); }
};

// SH decomposition of frequency-domain node signals: a = D s per bin, with
// the cardioid combination applied internally on surface grids (pressure
// only at DC). The signal bin axis must match the decomposition's.
ShSignal analyze(const NodeSignals& signals, const SamplingGrid& grid,
                 const DecompositionMatrix& d, double c = kSpeedOfSound);

}  // namespace aural
