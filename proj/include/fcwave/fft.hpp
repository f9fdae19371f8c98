/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/types.hpp"

namespace fcwave::fft {

/// In-place forward DFT, W[p,j] = exp(-2*pi*i*p*j/n), no scaling.
void forward(cd* data, std::size_t n);

/// In-place inverse DFT including the 1/n factor.
void inverse(cd* data, std::size_t n);

inline void forward(cvec& v) { forward(v.data(), v.size()); }
inline void inverse(cvec& v) { inverse(v.data(), v.size()); }

cvec forward_copy(const cvec& v);
cvec inverse_copy(const cvec& v);

} // namespace fcwave::fft
