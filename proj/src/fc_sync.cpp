/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/fc_sync.hpp"

#include "fcwave/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fcwave {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::int64_t cp_partial_sum(const CpSchedule& cps, int n) {
    // sum over symbols 1..n (the first symbol's CP is excluded by Eq. 20b)
    std::int64_t s = 0;
    for (int q = 1; q <= n; ++q) s += cps.per_symbol_high_rate[static_cast<std::size_t>(q)];
    return s;
}
} // namespace

CpSplit cp_truncate(int n_cp_high, int I) {
    if (I < 1) throw std::invalid_argument("interpolation factor must be >= 1");
    CpSplit s;
    s.l_cp = n_cp_high / I;
    s.extrap = n_cp_high - I * s.l_cp;
    return s;
}

cvec zero_pad_symbol(const cvec& cp_ofdm_symbol, const FcParams& p, int l_cp) {
    if (l_cp > p.L_L) throw std::invalid_argument("CP exceeds leading overlap (L_CP > L_L)");
    const int s_l = p.L_L - l_cp;
    if (static_cast<int>(cp_ofdm_symbol.size()) != p.L + l_cp)
        throw std::invalid_argument("symbol length must be L + L_CP");
    cvec z(static_cast<std::size_t>(3 * p.L / 2), cd{0.0, 0.0});
    for (std::size_t i = 0; i < cp_ofdm_symbol.size(); ++i)
        z[static_cast<std::size_t>(s_l) + i] = cp_ofdm_symbol[i];
    return z;
}

cd symbol_phase(int n, int c, const CpSchedule& cps, int N) {
    if (n < 0) throw std::invalid_argument("symbol index");
    const std::int64_t s = cp_partial_sum(cps, n);
    const std::int64_t num = (static_cast<std::int64_t>(c) % N) * (s % N) % N;
    return std::polar(1.0, two_pi * static_cast<double>(num) / N);
}

std::vector<double> first_block_analysis_window(const FcParams& p, int l_cp) {
    if (l_cp > p.L_L) throw std::invalid_argument("CP exceeds leading overlap");
    std::vector<double> a(static_cast<std::size_t>(p.L), 0.0);
    const int s_l = p.L_L - l_cp;
    for (int i = s_l; i < s_l + p.L_S + l_cp; ++i) a[static_cast<std::size_t>(i)] = 1.0;
    return a;
}

FilteredSymbol tx_symbol(const cvec& cp_ofdm_symbol, const SubbandConfig& cfg,
                         const FcParams& p, const CpSchedule& cps, int n) {
    if (cfg.L != cfg.l_ofdm)
        throw std::invalid_argument("symbol-synchronized TX requires L == L_OFDM");
    const int l_cp = static_cast<int>(cp_ofdm_symbol.size()) - p.L;
    const cvec z = zero_pad_symbol(cp_ofdm_symbol, p, l_cp);
    const cd theta = symbol_phase(n, cfg.c, cps, p.N);
    const std::vector<double> a0 = first_block_analysis_window(p, l_cp);
    const std::vector<double> a1 = analysis_window(p);
    const double scale = std::sqrt(static_cast<double>(p.I));

    FilteredSymbol out;
    out.n = n;
    out.samples.assign(static_cast<std::size_t>(3 * p.N / 2), cd{0.0, 0.0});
    for (int r = 0; r < 2; ++r) {
        cvec zr(z.begin() + static_cast<std::ptrdiff_t>(r) * (p.L / 2),
                z.begin() + static_cast<std::ptrdiff_t>(r) * (p.L / 2) + p.L);
        const cd phase = block_phase(r, cfg.c, p.L_S, p.L) * theta;
        cvec blk = sfb_block_ola(zr, cfg, p, phase, r == 0 ? &a0 : &a1);
        for (int t = 0; t < p.N; ++t)
            out.samples[static_cast<std::size_t>(r * p.N / 2 + t)] +=
                scale * blk[static_cast<std::size_t>(t)];
    }
    return out;
}

std::int64_t symbol_sigma(int n, const CpSchedule& cps, int N) {
    return static_cast<std::int64_t>(n) * N + cp_partial_sum(cps, n);
}

std::int64_t combined_length(int n_symbols, const CpSchedule& cps, const FcParams& p) {
    std::int64_t q = p.N_L + p.N_T + static_cast<std::int64_t>(n_symbols) * p.N;
    q += cp_partial_sum(cps, n_symbols - 1);
    return q;
}

Waveform combine_symbols(const std::vector<FilteredSymbol>& syms, const CpSchedule& cps,
                         const FcParams& p, double fs_hz) {
    if (syms.empty()) throw std::invalid_argument("no symbols");
    const int B = static_cast<int>(syms.size());
    Waveform w;
    w.fs_hz = fs_hz;
    w.useful0 = p.N_L;
    w.samples.assign(static_cast<std::size_t>(combined_length(B, cps, p)), cd{0.0, 0.0});
    for (const FilteredSymbol& s : syms) {
        if (static_cast<int>(s.samples.size()) != 3 * p.N / 2)
            throw std::invalid_argument("filtered symbol length must be 3N/2");
        const std::int64_t sigma = symbol_sigma(s.n, cps, p.N);
        for (std::size_t t = 0; t < s.samples.size(); ++t)
            w.samples[static_cast<std::size_t>(sigma) + t] += s.samples[t];
    }
    return w;
}

Waveform tx_discontinuous(const std::vector<QamGrid>& grids,
                          const std::vector<SubbandConfig>& cfgs, const CpSchedule& cps,
                          int N, double overlap, double fs_hz) {
    if (grids.size() != cfgs.size() || grids.empty())
        throw std::invalid_argument("one config per grid required");
    Waveform w;
    for (std::size_t m = 0; m < grids.size(); ++m) {
        const SubbandConfig& cfg = cfgs[m];
        const FcParams p = derive_fc_params(N, cfg.L, overlap);
        const int B = grids[m].n_symbols();
        if (B != static_cast<int>(cps.per_symbol_high_rate.size()))
            throw std::invalid_argument("grid symbol count must match CP schedule");
        std::vector<FilteredSymbol> syms;
        syms.reserve(static_cast<std::size_t>(B));
        for (int n = 0; n < B; ++n) {
            const CpSplit split = cp_truncate(cps.per_symbol_high_rate[static_cast<std::size_t>(n)], p.I);
            cvec sym = cp_insert(ofdm_modulate(grids[m], n), split.l_cp);
            syms.push_back(tx_symbol(sym, cfg, p, cps, n));
        }
        Waveform sub = combine_symbols(syms, cps, p, fs_hz);
        if (m == 0) {
            w = std::move(sub);
        } else {
            if (sub.samples.size() != w.samples.size() || sub.useful0 != w.useful0)
                throw std::invalid_argument("subbands must share N and the overlap factor");
            for (std::size_t t = 0; t < w.samples.size(); ++t) w.samples[t] += sub.samples[t];
        }
    }
    return w;
}

SymbolBlocks rx_segment(const Waveform& w, const CpSchedule& cps, const FcParams& p, int n) {
    if (n < 0 || n >= static_cast<int>(cps.per_symbol_high_rate.size()))
        throw std::out_of_range("symbol index outside CP schedule");
    const std::int64_t start = w.useful0 - p.N_L + symbol_sigma(n, cps, p.N);
    if (start < 0 ||
        start + 3 * p.N / 2 > static_cast<std::int64_t>(w.samples.size()))
        throw std::invalid_argument("waveform too short for symbol window");
    SymbolBlocks b;
    b.y0.assign(w.samples.begin() + start, w.samples.begin() + start + p.N);
    b.y1.assign(w.samples.begin() + start + p.N / 2, w.samples.begin() + start + 3 * p.N / 2);
    return b;
}

cvec rx_symbol_direct(const cvec& y0, const cvec& y1, const SubbandConfig& cfg,
                      const FcParams& p, const CpSchedule& cps, int n) {
    if (cfg.L != cfg.l_ofdm)
        throw std::invalid_argument("symbol-synchronized RX requires L == L_OFDM");
    const cd theta = symbol_phase(n, cfg.c, cps, p.N);
    const double scale = std::sqrt(static_cast<double>(p.I));
    const int L = p.L;
    cvec x_ofdm(static_cast<std::size_t>(L));
    for (int r = 0; r < 2; ++r) {
        const cvec& y = r == 0 ? y0 : y1;
        const cd phase = block_phase(r, cfg.c, p.L_S, p.L) * theta;
        cvec z = afb_block_ols(y, cfg, p, phase);
        // central L/2 samples into the top (r=0) / bottom (r=1) half
        for (int i = 0; i < L / 2; ++i)
            x_ofdm[static_cast<std::size_t>(r * L / 2 + i)] =
                scale * z[static_cast<std::size_t>(L / 4 + i)];
    }
    return ofdm_demodulate(x_ofdm);
}

cvec rx_block_freq(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase) {
    if (static_cast<int>(y.size()) != p.N) throw std::invalid_argument("block length must be N");
    const int L = p.L, N = p.N;
    cvec Y = y;
    fft::forward(Y);
    cvec g(static_cast<std::size_t>(L), cd{0.0, 0.0});
    const cd cph = std::conj(phase);
    const int half = (L + 1) / 2;
    for (int p0 = 0; p0 < L; ++p0) {
        const int b = (p0 + L / 2) % L;
        const int q = ((cfg.c - half + p0) % N + N) % N;
        g[static_cast<std::size_t>(b)] =
            cph * cfg.window[static_cast<std::size_t>(p0)] * Y[static_cast<std::size_t>(q)];
    }
    return g;
}

cvec rx_symbol_simplified(const cvec& g0, const cvec& g1, const SubbandConfig& cfg,
                          const FcParams& p) {
    const int L = p.L;
    if (p.L_S * 2 != L)
        throw std::invalid_argument("fused RX path requires 50 % overlap");
    if (static_cast<int>(g0.size()) != L || static_cast<int>(g1.size()) != L)
        throw std::invalid_argument("frequency blocks must have length L");
    (void)cfg;

    auto omega = [&](int phi, const cvec& v) {
        // diag(W_L^(phi*q)) with W_L = exp(-j*2*pi/L)
        cvec out(v.size());
        for (int q = 0; q < L; ++q) {
            const long long e = ((static_cast<long long>(phi) * q) % L + L) % L;
            out[static_cast<std::size_t>(q)] =
                std::polar(1.0, -two_pi * static_cast<double>(e) / L) * v[static_cast<std::size_t>(q)];
        }
        return out;
    };

    // S-hat: synthesis window circularly shifted by L/4 -> passes [0, L/2).
    const std::vector<double> s = synthesis_window_low(p);
    std::vector<double> s_hat(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
        s_hat[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>((i + L / 4) % L)];

    cvec t = omega(L / 2, g1);
    cvec u(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
        u[static_cast<std::size_t>(i)] = g0[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i)];

    // F = Omega_{L/4} C Omega_{-L/4}, C = W_L S-hat W_L^{-1}
    cvec f = omega(-L / 4, u);
    fft::inverse(f);
    for (int i = 0; i < L; ++i) f[static_cast<std::size_t>(i)] *= s_hat[static_cast<std::size_t>(i)];
    fft::forward(f);
    f = omega(L / 4, f);

    for (int i = 0; i < L; ++i) f[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i)];
    cvec x = omega(-L / 4, f);

    // The direct path's sqrt(I)*(L/N) analysis scale and the 1/sqrt(L)
    // demodulation factor collapse into one constant here.
    const double scale = std::sqrt(static_cast<double>(p.I)) *
                         (static_cast<double>(p.L) / p.N) /
                         std::sqrt(static_cast<double>(L));
    for (auto& v : x) v *= scale;
    return x;
}

std::vector<cvec> rx_discontinuous(const Waveform& w, const SubbandConfig& cfg,
                                   const CpSchedule& cps, int N, double overlap,
                                   bool simplified) {
    const FcParams p = derive_fc_params(N, cfg.L, overlap);
    const int B = static_cast<int>(cps.per_symbol_high_rate.size());
    std::vector<cvec> grids;
    grids.reserve(static_cast<std::size_t>(B));
    for (int n = 0; n < B; ++n) {
        SymbolBlocks b = rx_segment(w, cps, p, n);
        if (!simplified) {
            grids.push_back(rx_symbol_direct(b.y0, b.y1, cfg, p, cps, n));
        } else {
            const cd theta = symbol_phase(n, cfg.c, cps, p.N);
            cvec g0 = rx_block_freq(b.y0, cfg, p, block_phase(0, cfg.c, p.L_S, p.L) * theta);
            cvec g1 = rx_block_freq(b.y1, cfg, p, block_phase(1, cfg.c, p.L_S, p.L) * theta);
            grids.push_back(rx_symbol_simplified(g0, g1, cfg, p));
        }
    }
    return grids;
}

} // namespace fcwave
