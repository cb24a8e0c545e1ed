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

#include "aural/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace aural {
namespace {

// Plan cache. Plan creation is not thread-safe in FFTW, execution with the
// new-array interface is. Plans are created with FFTW_UNALIGNED so they can
// run on arbitrary caller buffers.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan forward(int nfft) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = fwd_.find(nfft);
    if (it != fwd_.end()) return it->second;
    std::vector<double> in(static_cast<size_t>(nfft));
    std::vector<fftw_complex> out(static_cast<size_t>(nfft / 2 + 1));
    fftw_plan p = fftw_plan_dft_r2c_1d(nfft, in.data(), out.data(),
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
    fwd_[nfft] = p;
    return p;
  }

  fftw_plan backward(int nfft) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bwd_.find(nfft);
    if (it != bwd_.end()) return it->second;
    std::vector<fftw_complex> in(static_cast<size_t>(nfft / 2 + 1));
    std::vector<double> out(static_cast<size_t>(nfft));
    fftw_plan p = fftw_plan_dft_c2r_1d(nfft, in.data(), out.data(),
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd_[nfft] = p;
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<int, fftw_plan> fwd_;
  std::map<int, fftw_plan> bwd_;
};

}  // namespace

int next_fft_size(int n) {
  int nfft = n + (n & 1);
  if (nfft < 2) nfft = 2;
  return nfft;
}

Eigen::VectorXcd rfft(const Eigen::VectorXd& x, int nfft) {
  if (nfft < 2 || nfft % 2 != 0)
    throw std::invalid_argument("rfft: nfft must be even and >= 2");
  if (x.size() > nfft) throw std::invalid_argument("rfft: input longer than nfft");
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(nfft);
  padded.head(x.size()) = x;
  Eigen::VectorXcd out(nfft / 2 + 1);
  fftw_execute_dft_r2c(PlanCache::instance().forward(nfft), padded.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

Eigen::VectorXd irfft(const Eigen::VectorXcd& spectrum, int nfft) {
  if (nfft < 2 || nfft % 2 != 0)
    throw std::invalid_argument("irfft: nfft must be even and >= 2");
  if (spectrum.size() != nfft / 2 + 1)
    throw std::invalid_argument("irfft: spectrum size does not match nfft");
  // c2r destroys its input; work on a copy.
  Eigen::VectorXcd tmp = spectrum;
  Eigen::VectorXd out(nfft);
  fftw_execute_dft_c2r(PlanCache::instance().backward(nfft),
                       reinterpret_cast<fftw_complex*>(tmp.data()), out.data());
  out /= static_cast<double>(nfft);
  return out;
}

Eigen::MatrixXcd rfft_rows(const Eigen::MatrixXd& x, int nfft) {
  Eigen::MatrixXcd out(x.rows(), nfft / 2 + 1);
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    out.row(r) = rfft(x.row(r).transpose(), nfft).transpose();
  return out;
}

Eigen::MatrixXd irfft_rows(const Eigen::MatrixXcd& spectra, int nfft) {
  Eigen::MatrixXd out(spectra.rows(), nfft);
  for (Eigen::Index r = 0; r < spectra.rows(); ++r)
    out.row(r) = irfft(spectra.row(r).transpose(), nfft).transpose();
  return out;
}

}  // namespace aural
