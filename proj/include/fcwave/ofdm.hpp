/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/types.hpp"

#include <cstdint>
#include <vector>

namespace fcwave {

/// Gray-mapped square QAM, unit average power.
enum class Modulation { QPSK, QAM16, QAM64 };

int bits_per_symbol(Modulation m);

/// Map bits (LSB-first groups of bits_per_symbol) to constellation points.
cd qam_map(Modulation m, unsigned symbol_bits);

/// Hard decision back to the bit group.
unsigned qam_demap(Modulation m, cd y);

/// Frequency-domain QAM grid for one subband: l_ofdm-bin columns, one per
/// OFDM symbol, nonzero only on active_map bins (DFT bin indices).
struct QamGrid {
    int l_ofdm = 0;
    std::vector<int> active_map;          // DFT bin indices within [0, l_ofdm)
    std::vector<cvec> symbols;            // symbols[n] has length l_ofdm

    int n_symbols() const { return static_cast<int>(symbols.size()); }
};

/// Active DFT bins for n_active subcarriers centred on the subband, DC bin
/// excluded when skip_dc is set (the default for the scenarios here).
std::vector<int> centered_active_map(int l_ofdm, int n_active, bool skip_dc = true);

/// sqrt(L) * IDFT of one grid column. Unitary pair with ofdm_demodulate.
cvec ofdm_modulate(const QamGrid& grid, int n);

/// Prepend the last l_cp samples (cyclic prefix).
cvec cp_insert(const cvec& sym, int l_cp);

/// Drop the prefix: samples [l_cp, l_cp + l_ofdm).
cvec cp_remove(const cvec& sig, int l_cp, int l_ofdm);

/// DFT / sqrt(L).
cvec ofdm_demodulate(const cvec& sym);

/// Concatenated CP-OFDM symbol stream at the subband's low rate.
struct CpOfdmSignal {
    cvec samples;
    std::vector<int> cp_lengths;  // low-rate L_CP per symbol
    int l_ofdm = 0;
};

CpOfdmSignal build_cp_ofdm(const QamGrid& grid, const std::vector<int>& cp_lengths);

} // namespace fcwave
