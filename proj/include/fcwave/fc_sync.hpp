/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/fc_core.hpp"

namespace fcwave {

/// Split a high-rate CP length into the integer low-rate part and the
/// high-rate remainder the synthesis must extrapolate.
struct CpSplit {
    int l_cp = 0;    // floor(N_CP / I) low-rate samples
    int extrap = 0;  // N_CP - I*l_cp high-rate samples
};
CpSplit cp_truncate(int n_cp_high, int I);

/// [S_L zeros; CP-OFDM symbol; L_T zeros] with S_L = L_L - L_CP; total 3L/2.
cvec zero_pad_symbol(const cvec& cp_ofdm_symbol, const FcParams& p, int l_cp);

/// Per-symbol rotator theta_n = exp(+j*2*pi*c*phi_n), phi_n = (1/N)*sum of
/// the high-rate CP lengths of symbols 1..n. Keeps the subband carrier
/// continuous across symbols placed on the exact high-rate CP grid.
cd symbol_phase(int n, int c, const CpSchedule& cps, int N);

/// First-block analysis window: passes [S_L, S_L + L_S + L_CP).
std::vector<double> first_block_analysis_window(const FcParams& p, int l_cp);

/// Filtered high-rate waveform of one symbol, length 3N/2; the useful part
/// starts at offset N_L.
struct FilteredSymbol {
    cvec samples;
    int n = 0;
};

/// Two FC blocks per symbol (OLA), overlap-added at N/2 into a 3N/2 buffer.
FilteredSymbol tx_symbol(const cvec& cp_ofdm_symbol, const SubbandConfig& cfg,
                         const FcParams& p, const CpSchedule& cps, int n);

/// Symbol-wise overlap-add at offsets sigma_n = n*N + sum_{q=1..n} N_CP,q
/// into a buffer of length Q = N_L + N_T + B*N + sum_{n>=1} N_CP,n.
Waveform combine_symbols(const std::vector<FilteredSymbol>& syms, const CpSchedule& cps,
                         const FcParams& p, double fs_hz);

std::int64_t symbol_sigma(int n, const CpSchedule& cps, int N);
std::int64_t combined_length(int n_symbols, const CpSchedule& cps, const FcParams& p);

/// Full discontinuous TX: per-symbol tx_symbol, combine, subband sum.
/// cps holds the exact high-rate CP lengths; the low-rate CP of each symbol
/// in `signals` must be cp_truncate(N_CP, I).l_cp.
Waveform tx_discontinuous(const std::vector<QamGrid>& grids,
                          const std::vector<SubbandConfig>& cfgs, const CpSchedule& cps,
                          int N, double overlap, double fs_hz);

/// Extract the two overlapping length-N blocks of symbol n.
struct SymbolBlocks {
    cvec y0, y1;
};
SymbolBlocks rx_segment(const Waveform& w, const CpSchedule& cps, const FcParams& p, int n);

/// Direct RX path: per-block OLS analysis, central halves concatenated
/// (the P^(L/4) / P^(-L/4) selection), then OFDM demodulation.
cvec rx_symbol_direct(const cvec& y0, const cvec& y1, const SubbandConfig& cfg,
                      const FcParams& p, const CpSchedule& cps, int n);

/// Fused RX path operating on the frequency-domain FC outputs g0, g1 (the
/// windowed, down-mapped blocks): one length-L inverse and one length-L
/// forward transform instead of two inverses plus the demodulation FFT.
/// Valid for 50 % overlap; numerically equal to the direct path.
cvec rx_symbol_simplified(const cvec& g0, const cvec& g1, const SubbandConfig& cfg,
                          const FcParams& p);

/// Frequency-domain FC output block feeding the simplified path.
cvec rx_block_freq(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase);

/// Discontinuous RX of all symbols; `simplified` selects the fused path.
std::vector<cvec> rx_discontinuous(const Waveform& w, const SubbandConfig& cfg,
                                   const CpSchedule& cps, int N, double overlap,
                                   bool simplified = false);

} // namespace fcwave
