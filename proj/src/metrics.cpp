/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/metrics.hpp"

#include "fcwave/fc_core.hpp"
#include "fcwave/fft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fcwave {

std::int64_t mu(int L) {
    if (L < 2 || (L & (L - 1)) != 0)
        throw std::invalid_argument("mu requires a power of two >= 2");
    int log2l = 0;
    for (int v = L; v > 1; v >>= 1) ++log2l;
    return static_cast<std::int64_t>(L) * log2l - 3LL * L + 4;
}

void Rational::reduce() {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {
Rational make_rat(std::int64_t num, std::int64_t den) {
    Rational r{num, den};
    r.reduce();
    return r;
}
} // namespace

ComplexityReport complexity(const std::vector<SubbandGeometry>& subbands, int N, int slot_len,
                            FcMode mode, double overlap, bool beta_half,
                            const CpSchedule& cps) {
    if (subbands.empty() || slot_len < 1) throw std::invalid_argument("invalid complexity inputs");
    if (static_cast<int>(cps.per_symbol_high_rate.size()) < slot_len)
        throw std::invalid_argument("CP schedule shorter than the slot");

    ComplexityReport rep;
    rep.N = N;
    rep.slot_len = slot_len;
    rep.overlap = overlap;
    rep.mode = mode;
    rep.beta = beta_half ? 0.5 : 1.0;

    std::int64_t blocks = 0;  // FC blocks consumed for the slot
    if (mode == FcMode::Discontinuous) {
        blocks = 2LL * slot_len;
    } else {
        const FcParams p0 = derive_fc_params(N, subbands.front().L, overlap);
        std::int64_t span = static_cast<std::int64_t>(slot_len) * N;
        for (int n = 0; n < slot_len; ++n) {
            const int ncp = cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            if (ncp % (N / subbands.front().L) != 0)
                throw std::invalid_argument("continuous mode needs integer low-rate CP");
            span += ncp;
        }
        const std::int64_t need = span + p0.N_T;
        blocks = (need + p0.N_S - 1) / p0.N_S;
        for (const auto& g : subbands) {
            const FcParams pm = derive_fc_params(N, g.L, overlap);
            for (int n = 0; n < slot_len; ++n)
                if (cps.per_symbol_high_rate[static_cast<std::size_t>(n)] % pm.I != 0)
                    throw std::invalid_argument("continuous mode needs integer low-rate CP");
        }
    }

    // alpha = blocks / slot_len; beta folds in as a factor 1/2 via doubled
    // denominators so everything stays exact.
    rep.alpha = make_rat(blocks, slot_len);
    rep.c_high = make_rat(blocks * mu(N), slot_len);

    std::int64_t total_act = 0;
    // slot totals scaled by 2 to absorb beta = 1/2
    std::int64_t slot_total_x2 = 2 * blocks * mu(N);
    for (const auto& g : subbands) {
        total_act += g.n_active;
        const std::int64_t beta_x2 = beta_half ? 1 : 2;
        const std::int64_t low_slot_x2 = beta_x2 * blocks * mu(g.L) +
                                         2LL * 6 * blocks * g.n_tb +
                                         2LL * slot_len * mu(g.l_ofdm);
        slot_total_x2 += low_slot_x2;
        SubbandComplexity sc;
        sc.geo = g;
        sc.c_low = make_rat(low_slot_x2, 2LL * slot_len);
        rep.subbands.push_back(sc);
    }
    rep.c_per_qam = make_rat(slot_total_x2, 2LL * slot_len * total_act);
    return rep;
}

double ber(const std::vector<std::uint8_t>& tx_bits, const std::vector<std::uint8_t>& rx_bits) {
    if (tx_bits.size() != rx_bits.size() || tx_bits.empty())
        throw std::invalid_argument("bit vectors must be equal-length and non-empty");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < tx_bits.size(); ++i)
        errors += (tx_bits[i] != rx_bits[i]) ? 1u : 0u;
    return static_cast<double>(errors) / static_cast<double>(tx_bits.size());
}

double evm_db(const cvec& ref, const cvec& rx) {
    if (ref.size() != rx.size() || ref.empty())
        throw std::invalid_argument("grids must be equal-length and non-empty");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        num += std::norm(rx[i] - ref[i]);
        den += std::norm(ref[i]);
    }
    if (den <= 0.0) throw std::invalid_argument("zero reference power");
    if (num <= 0.0) return 300.0;
    const double v = -10.0 * std::log10(num / den);
    return v > 300.0 ? 300.0 : v;
}

std::vector<double> psd(const cvec& samples, int seg_len, double overlap_frac) {
    if (seg_len <= 0 || static_cast<std::size_t>(seg_len) > samples.size())
        throw std::invalid_argument("waveform shorter than one segment");
    if (overlap_frac < 0.0 || overlap_frac >= 1.0)
        throw std::invalid_argument("overlap fraction in [0,1)");
    const int hop = std::max(1, static_cast<int>(std::lround(seg_len * (1.0 - overlap_frac))));
    std::vector<double> win(static_cast<std::size_t>(seg_len));
    double wpow = 0.0;
    for (int i = 0; i < seg_len; ++i) {
        win[static_cast<std::size_t>(i)] =
            0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / seg_len);
        wpow += win[static_cast<std::size_t>(i)] * win[static_cast<std::size_t>(i)];
    }
    std::vector<double> acc(static_cast<std::size_t>(seg_len), 0.0);
    int n_seg = 0;
    for (std::size_t start = 0; start + static_cast<std::size_t>(seg_len) <= samples.size();
         start += static_cast<std::size_t>(hop)) {
        cvec seg(samples.begin() + static_cast<std::ptrdiff_t>(start),
                 samples.begin() + static_cast<std::ptrdiff_t>(start) + seg_len);
        for (int i = 0; i < seg_len; ++i) seg[static_cast<std::size_t>(i)] *= win[static_cast<std::size_t>(i)];
        fft::forward(seg);
        for (int i = 0; i < seg_len; ++i) acc[static_cast<std::size_t>(i)] += std::norm(seg[static_cast<std::size_t>(i)]);
        ++n_seg;
    }
    const double scale = 1.0 / (static_cast<double>(n_seg) * wpow);
    for (auto& v : acc) v *= scale;
    return acc;
}

namespace {
double qam_axis_ber(int sqrt_m, int k_bits, double esn0) {
    // exact Gray-coded BER of one PAM axis of a square QAM constellation
    const int M = sqrt_m * sqrt_m;
    double sum = 0.0;
    for (int k = 1; k <= k_bits; ++k) {
        double inner = 0.0;
        const int top = static_cast<int>((1.0 - std::pow(2.0, -k)) * sqrt_m) - 1;
        for (int i = 0; i <= top; ++i) {
            const double f = std::floor(static_cast<double>(i) * (1 << (k - 1)) / sqrt_m);
            const double sign = (static_cast<long long>(f) % 2 == 0) ? 1.0 : -1.0;
            const double weight =
                (1 << (k - 1)) - std::floor(static_cast<double>(i) * (1 << (k - 1)) / sqrt_m + 0.5);
            const double arg = (2.0 * i + 1.0) * std::sqrt(3.0 * esn0 / (2.0 * (M - 1)));
            inner += sign * weight * std::erfc(arg);
        }
        sum += inner / sqrt_m;
    }
    return sum / k_bits;
}
} // namespace

double theory_ber(Modulation m, double esn0_db) {
    const double esn0 = std::pow(10.0, esn0_db / 10.0);
    switch (m) {
        case Modulation::QPSK: return qam_axis_ber(2, 1, esn0);
        case Modulation::QAM16: return qam_axis_ber(4, 2, esn0);
        case Modulation::QAM64: return qam_axis_ber(8, 3, esn0);
    }
    return 0.5;
}

double theory_esn0_db_at_ber(Modulation m, double target_ber) {
    double lo = -10.0, hi = 60.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (theory_ber(m, mid) > target_ber)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace fcwave
