/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fcwave {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

/// Complex baseband sample sequence at a fixed sample rate.
///
/// `useful0` is the index in `samples` of the first sample of symbol 0's
/// useful part (i.e. just after its cyclic prefix). All later symbol
/// positions derive from it together with the per-symbol CP schedule, so a
/// receiver never has to guess alignment.
struct Waveform {
    cvec samples;
    double fs_hz = 0.0;
    std::int64_t useful0 = 0;
};

} // namespace fcwave
