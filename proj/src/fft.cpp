/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace fcwave::fft {
namespace {

// Plans are created once per (size, direction) with FFTW_UNALIGNED so they can
// execute on any caller buffer. Creation is serialized; execution is not.
class PlanCache {
  public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lk(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        cvec tmp(n);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                       reinterpret_cast<fftw_complex*>(tmp.data()),
                                       reinterpret_cast<fftw_complex*>(tmp.data()),
                                       sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

void forward(cd* data, std::size_t n) {
    if (n == 0) return;
    fftw_plan p = cache().get(n, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                     reinterpret_cast<fftw_complex*>(data));
}

void inverse(cd* data, std::size_t n) {
    if (n == 0) return;
    fftw_plan p = cache().get(n, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                     reinterpret_cast<fftw_complex*>(data));
    const double s = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) data[i] *= s;
}

cvec forward_copy(const cvec& v) {
    cvec out = v;
    forward(out);
    return out;
}

cvec inverse_copy(const cvec& v) {
    cvec out = v;
    inverse(out);
    return out;
}

} // namespace fcwave::fft
