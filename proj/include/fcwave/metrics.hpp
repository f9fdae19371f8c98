/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/numerology.hpp"
#include "fcwave/ofdm.hpp"
#include "fcwave/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcwave {

/// Real multiplications of a split-radix transform: L*log2(L) - 3L + 4.
std::int64_t mu(int L);

/// Exact rational used by the complexity model.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    void reduce();
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

enum class FcMode { Continuous, Discontinuous };

struct SubbandGeometry {
    int L = 0;
    int l_ofdm = 0;
    int n_tb = 0;
    int n_active = 0;
};

struct SubbandComplexity {
    SubbandGeometry geo;
    Rational c_low;  // real mults per OFDM symbol for this subband
};

struct ComplexityReport {
    int N = 0;
    int slot_len = 0;
    double overlap = 0.5;
    double beta = 1.0;  // 1 direct RX, 1/2 simplified RX
    FcMode mode = FcMode::Discontinuous;
    Rational alpha;   // FC blocks per OFDM symbol
    Rational c_high;  // per OFDM symbol
    std::vector<SubbandComplexity> subbands;
    Rational c_per_qam;
};

/// Per-QAM-symbol count: c_high = alpha*mu(N), c_low,m = alpha*beta*mu(L_m)
/// + 6*alpha*n_tb,m + mu(l_ofdm,m), where alpha is the number of FC blocks
/// per OFDM symbol. Continuous mode counts the blocks actually consumed by
/// the slot; discontinuous uses exactly two per symbol. beta_half selects
/// the fused RX accounting.
ComplexityReport complexity(const std::vector<SubbandGeometry>& subbands, int N, int slot_len,
                            FcMode mode, double overlap, bool beta_half,
                            const CpSchedule& cps);

/// Bit error rate between two equal-length bit vectors.
double ber(const std::vector<std::uint8_t>& tx_bits, const std::vector<std::uint8_t>& rx_bits);

/// In-band error suppression in positive dB: -10*log10(sum|rx-ref|^2 /
/// sum|ref|^2), clamped to 300 dB for an exact match.
double evm_db(const cvec& ref, const cvec& rx);

/// Welch averaged periodogram with Hann segments; returns linear power per
/// FFT bin (bin k = frequency k/seg_len of the sampling rate).
std::vector<double> psd(const cvec& samples, int seg_len, double overlap_frac = 0.5);

/// Exact Gray-coded square-QAM bit error probability over AWGN at the given
/// Es/N0, and its inverse (Es/N0 in dB reaching a target BER).
double theory_ber(Modulation m, double esn0_db);
double theory_esn0_db_at_ber(Modulation m, double target_ber);

} // namespace fcwave
