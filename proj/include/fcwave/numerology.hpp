/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <vector>

namespace fcwave {

/// 5G-NR style numerology: power-of-two high-rate transform scaled from the
/// 15 kHz / N=1024 reference.
struct Numerology {
    int scs_khz = 15;
    int n_fft = 1024;
    int symbols_per_half_subframe = 7;

    double fs_hz() const { return static_cast<double>(scs_khz) * 1000.0 * n_fft; }
};

/// Per-symbol cyclic-prefix lengths in high-rate samples.
struct CpSchedule {
    std::vector<int> per_symbol_high_rate;

    int total() const {
        int s = 0;
        for (int v : per_symbol_high_rate) s += v;
        return s;
    }
};

/// Block geometry of the fast-convolution bank for one subband.
struct FcParams {
    int L = 0;  // short transform size
    int N = 0;  // long transform size
    double overlap = 0.5;
    int L_O = 0, L_S = 0, L_L = 0, L_T = 0;
    int N_O = 0, N_S = 0, N_L = 0, N_T = 0;
    int I = 1;  // interpolation factor N/L
};

Numerology make_numerology(int scs_khz, int n_fft);

/// High-rate CP length per symbol: the first symbol of each half subframe is
/// longer (80 vs 72 at N=1024), linearly scaled by n_fft/1024.
CpSchedule cp_schedule(const Numerology& num, int n_symbols);

FcParams derive_fc_params(int N, int L, double overlap);

/// Reduced overlap of the first FC block of a symbol: 0.5 - L_CP/L.
double first_block_overlap(const FcParams& params, int l_cp);

} // namespace fcwave
