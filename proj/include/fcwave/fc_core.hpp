/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/numerology.hpp"
#include "fcwave/ofdm.hpp"
#include "fcwave/types.hpp"

#include <vector>

namespace fcwave {

/// One subband of the fast-convolution bank.
///
/// `window` is the frequency-domain weight vector of length L indexed in the
/// shifted (centred) domain: index L/2 is the subband centre, which the bin
/// mapping places on bin `c` of the N-point grid.
struct SubbandConfig {
    int L = 0;        // short transform size L_m
    int l_ofdm = 0;   // OFDM transform size (equal to L for the synchronized scheme)
    int c = 0;        // centre bin in the N-bin grid
    int n_active = 0; // active (QAM-bearing) subcarriers
    int n_tb = 0;     // transition bins per edge
    std::vector<double> window;
};

/// Centred passband of `n_pass` ones with raised-cosine half-transitions of
/// length n_tb per edge: w_k = cos^2(pi*(k+1)/(2*(n_tb+1))), descending
/// outward, zeros elsewhere.
std::vector<double> design_window(int L, int n_pass, int n_tb);

/// Phase rotator keeping consecutive overlapping blocks continuous:
/// exp(+j*2*pi*r*c*L_S/L).
cd block_phase(std::int64_t r, int c, int L_S, int L);

/// Maps the L shifted-domain bins of `spec` onto the N-bin grid around
/// cfg.c, scaled by `phase`, accumulating into `out` (transition bins of
/// adjacent subbands add up).
void map_bins(const cvec& spec, const SubbandConfig& cfg, int N, cd phase, cvec& out);

/// Standard time-domain analysis window [0_LL 1_LS 0_LT] (low rate).
std::vector<double> analysis_window(const FcParams& p);
/// Synthesis window [0_NL 1_NS 0_NT] (high rate).
std::vector<double> synthesis_window_high(const FcParams& p);
/// Low-rate synthesis window used by OLS analysis, same shape as analysis_window.
std::vector<double> synthesis_window_low(const FcParams& p);

/// Synthesis blocks (length-L in, length-N out, no sqrt(I) scaling).
/// OLA: time-domain analysis window a (defaults to analysis_window) before
/// the short transform. OLS: high-rate synthesis window after the long one.
cvec sfb_block_ola(const cvec& x, const SubbandConfig& cfg, const FcParams& p, cd phase,
                   const std::vector<double>* a_override = nullptr);
cvec sfb_block_ols(const cvec& x, const SubbandConfig& cfg, const FcParams& p, cd phase);

/// Analysis blocks (length-N in, length-L out), numerically equal to the
/// conjugate transpose of the corresponding synthesis matrix:
/// afb_block_ola = conj(F_OLS)^T, afb_block_ols = conj(F_OLA)^T.
cvec afb_block_ola(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase);
cvec afb_block_ols(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase,
                   const std::vector<double>* s_override = nullptr);

/// FC blocks consumed by continuous processing of a low-rate stream of
/// `stream_len` samples (zero padding S_L = L - L_S at both ends).
int continuous_block_count(int stream_len, const FcParams& p);

/// Continuous OLA synthesis of per-subband CP-OFDM streams sharing N and the
/// overlap factor. All subbands start their first CP at high-rate position
/// lambda*N, so Waveform.useful0 = lambda*N + I*L_CP[0].
Waveform tx_continuous(const std::vector<CpOfdmSignal>& signals,
                       const std::vector<SubbandConfig>& cfgs, int N, double overlap,
                       double fs_hz);

/// Continuous OLS analysis; output sample u corresponds to high-rate sample
/// I*u of `w`. Produces at least ceil(len(w)/I) + L samples.
cvec rx_continuous(const Waveform& w, const SubbandConfig& cfg, const FcParams& p);

} // namespace fcwave
