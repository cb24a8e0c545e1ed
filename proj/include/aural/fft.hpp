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

#include <Eigen/Dense>

#include "aural/common.hpp"

namespace aural {

// Real-signal transforms (FFTW behind the scenes, plans cached per size).
// rfft returns the half spectrum with nfft/2 + 1 bins; irfft applies the
// 1/nfft scaling so irfft(rfft(x)) == x. Thread-safe.

Eigen::VectorXcd rfft(const Eigen::VectorXd& x, int nfft);
Eigen::VectorXd irfft(const Eigen::VectorXcd& spectrum, int nfft);

// Row-wise transforms for multichannel blocks (rows are channels).
Eigen::MatrixXcd rfft_rows(const Eigen::MatrixXd& x, int nfft);
Eigen::MatrixXd irfft_rows(const Eigen::MatrixXcd& spectra, int nfft);

inline int rfft_bins(int nfft) { return nfft / 2 + 1; }

// Smallest even FFT size that holds n samples. Sticking to even sizes keeps
// the half-spectrum bin count consistent with the K = nfft/2 + 1 convention.
int next_fft_size(int n);

}  // namespace aural
