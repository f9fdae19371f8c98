/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/fc_core.hpp"

#include "fcwave/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fcwave {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_block_sizes(const SubbandConfig& cfg, const FcParams& p) {
    if (cfg.L != p.L) throw std::invalid_argument("subband L does not match FC params");
    if (static_cast<int>(cfg.window.size()) != cfg.L)
        throw std::invalid_argument("window length must be L");
}
} // namespace

std::vector<double> design_window(int L, int n_pass, int n_tb) {
    if (n_pass <= 0 || n_tb < 0 || n_pass + 2 * n_tb > L)
        throw std::invalid_argument("window allocation exceeds L");
    std::vector<double> w(static_cast<std::size_t>(L), 0.0);
    const int lo = L / 2 - n_pass / 2;
    const int hi = lo + n_pass - 1;
    for (int i = lo; i <= hi; ++i) w[static_cast<std::size_t>(i)] = 1.0;
    for (int k = 0; k < n_tb; ++k) {
        const double v = std::cos(std::numbers::pi * (k + 1) / (2.0 * (n_tb + 1)));
        const double val = v * v;
        w[static_cast<std::size_t>(lo - 1 - k)] = val;
        w[static_cast<std::size_t>(hi + 1 + k)] = val;
    }
    return w;
}

cd block_phase(std::int64_t r, int c, int L_S, int L) {
    const long long num = static_cast<long long>(r) * c % L * L_S % L;
    return std::polar(1.0, two_pi * static_cast<double>(num) / L);
}

void map_bins(const cvec& spec, const SubbandConfig& cfg, int N, cd phase, cvec& out) {
    const int L = cfg.L;
    if (static_cast<int>(spec.size()) != L) throw std::invalid_argument("spec length must be L");
    if (static_cast<int>(out.size()) != N) throw std::invalid_argument("out length must be N");
    const int half = (L + 1) / 2;
    for (int p0 = 0; p0 < L; ++p0) {
        const int q = ((cfg.c - half + p0) % N + N) % N;
        out[static_cast<std::size_t>(q)] += phase * spec[static_cast<std::size_t>(p0)];
    }
}

std::vector<double> analysis_window(const FcParams& p) {
    std::vector<double> a(static_cast<std::size_t>(p.L), 0.0);
    for (int i = p.L_L; i < p.L_L + p.L_S; ++i) a[static_cast<std::size_t>(i)] = 1.0;
    return a;
}

std::vector<double> synthesis_window_high(const FcParams& p) {
    std::vector<double> s(static_cast<std::size_t>(p.N), 0.0);
    for (int i = p.N_L; i < p.N_L + p.N_S; ++i) s[static_cast<std::size_t>(i)] = 1.0;
    return s;
}

std::vector<double> synthesis_window_low(const FcParams& p) { return analysis_window(p); }

namespace {

// Short transform, shift, window, map, long inverse transform. The fft-shift
// permutation is index arithmetic: shifted position p0 holds DFT bin
// (p0 + L/2) mod L and lands on grid bin (c - ceil(L/2) + p0) mod N.
cvec synth_core(const cvec& x, const SubbandConfig& cfg, const FcParams& p, cd phase) {
    const int L = p.L, N = p.N;
    cvec X = x;
    fft::forward(X);
    cvec out(static_cast<std::size_t>(N), cd{0.0, 0.0});
    const int half = (L + 1) / 2;
    for (int p0 = 0; p0 < L; ++p0) {
        const int b = (p0 + L / 2) % L;
        const int q = ((cfg.c - half + p0) % N + N) % N;
        out[static_cast<std::size_t>(q)] =
            phase * cfg.window[static_cast<std::size_t>(p0)] * X[static_cast<std::size_t>(b)];
    }
    fft::inverse(out);
    return out;
}

// Adjoint of synth_core: long transform, demap with conj(phase), inverse
// short transform. Scaled so the whole map equals conj(F)^T elementwise.
cvec analysis_core(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase) {
    const int L = p.L, N = p.N;
    cvec Y = y;
    fft::forward(Y);
    cvec Z(static_cast<std::size_t>(L), cd{0.0, 0.0});
    const cd cph = std::conj(phase);
    const int half = (L + 1) / 2;
    for (int p0 = 0; p0 < L; ++p0) {
        const int b = (p0 + L / 2) % L;
        const int q = ((cfg.c - half + p0) % N + N) % N;
        Z[static_cast<std::size_t>(b)] =
            cph * cfg.window[static_cast<std::size_t>(p0)] * Y[static_cast<std::size_t>(q)];
    }
    fft::inverse(Z);
    const double s = static_cast<double>(L) / N;
    for (auto& v : Z) v *= s;
    return Z;
}

} // namespace

cvec sfb_block_ola(const cvec& x, const SubbandConfig& cfg, const FcParams& p, cd phase,
                   const std::vector<double>* a_override) {
    check_block_sizes(cfg, p);
    if (static_cast<int>(x.size()) != p.L) throw std::invalid_argument("block length must be L");
    const std::vector<double> a_std = a_override ? std::vector<double>{} : analysis_window(p);
    const std::vector<double>& a = a_override ? *a_override : a_std;
    cvec xw(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xw[i] = x[i] * a[i];
    return synth_core(xw, cfg, p, phase);
}

cvec sfb_block_ols(const cvec& x, const SubbandConfig& cfg, const FcParams& p, cd phase) {
    check_block_sizes(cfg, p);
    if (static_cast<int>(x.size()) != p.L) throw std::invalid_argument("block length must be L");
    cvec out = synth_core(x, cfg, p, phase);
    for (int i = 0; i < p.N_L; ++i) out[static_cast<std::size_t>(i)] = 0.0;
    for (int i = p.N_L + p.N_S; i < p.N; ++i) out[static_cast<std::size_t>(i)] = 0.0;
    return out;
}

cvec afb_block_ola(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase) {
    check_block_sizes(cfg, p);
    if (static_cast<int>(y.size()) != p.N) throw std::invalid_argument("block length must be N");
    cvec yw = y;
    for (int i = 0; i < p.N_L; ++i) yw[static_cast<std::size_t>(i)] = 0.0;
    for (int i = p.N_L + p.N_S; i < p.N; ++i) yw[static_cast<std::size_t>(i)] = 0.0;
    return analysis_core(yw, cfg, p, phase);
}

cvec afb_block_ols(const cvec& y, const SubbandConfig& cfg, const FcParams& p, cd phase,
                   const std::vector<double>* s_override) {
    check_block_sizes(cfg, p);
    if (static_cast<int>(y.size()) != p.N) throw std::invalid_argument("block length must be N");
    cvec z = analysis_core(y, cfg, p, phase);
    const std::vector<double> s_std = s_override ? std::vector<double>{} : synthesis_window_low(p);
    const std::vector<double>& s = s_override ? *s_override : s_std;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= s[i];
    return z;
}

int continuous_block_count(int stream_len, const FcParams& p) {
    // Blocks hop by L_S; block R passes padded positions [R*L_S + L_L,
    // R*L_S + L_L + L_S). With S_L = L_O front padding, the last stream
    // sample sits at padded position L_O + stream_len - 1.
    const int need = stream_len + p.L_O - p.L_L;  // == stream_len + L_T
    return (need + p.L_S - 1) / p.L_S;
}

Waveform tx_continuous(const std::vector<CpOfdmSignal>& signals,
                       const std::vector<SubbandConfig>& cfgs, int N, double overlap,
                       double fs_hz) {
    if (signals.size() != cfgs.size() || signals.empty())
        throw std::invalid_argument("one config per subband signal required");
    Waveform w;
    w.fs_hz = fs_hz;
    for (std::size_t m = 0; m < signals.size(); ++m) {
        const SubbandConfig& cfg = cfgs[m];
        const CpOfdmSignal& sig = signals[m];
        const FcParams p = derive_fc_params(N, cfg.L, overlap);
        const int len = static_cast<int>(sig.samples.size());
        const int R_tot = continuous_block_count(len, p);
        const int pad_len = std::max((R_tot - 1) * p.L_S + p.L, p.L_O + len);
        cvec padded(static_cast<std::size_t>(pad_len), cd{0.0, 0.0});
        for (int j = 0; j < len; ++j)
            padded[static_cast<std::size_t>(p.L_O + j)] = sig.samples[static_cast<std::size_t>(j)];
        const std::size_t out_len = static_cast<std::size_t>((R_tot - 1) * p.N_S + p.N);
        if (w.samples.size() < out_len) w.samples.resize(out_len, cd{0.0, 0.0});
        const double scale = std::sqrt(static_cast<double>(p.I));
        const std::vector<double> a = analysis_window(p);
        for (int R = 0; R < R_tot; ++R) {
            cvec x(padded.begin() + static_cast<std::ptrdiff_t>(R) * p.L_S,
                   padded.begin() + static_cast<std::ptrdiff_t>(R) * p.L_S + p.L);
            const cd phase = block_phase(R, cfg.c, p.L_S, p.L);
            cvec blk = sfb_block_ola(x, cfg, p, phase, &a);
            for (int t = 0; t < p.N; ++t)
                w.samples[static_cast<std::size_t>(R * p.N_S + t)] += scale * blk[static_cast<std::size_t>(t)];
        }
        if (m == 0) {
            const int l_cp0 = sig.cp_lengths.empty() ? 0 : sig.cp_lengths.front();
            w.useful0 = static_cast<std::int64_t>(std::lround(overlap * N)) +
                        static_cast<std::int64_t>(p.I) * l_cp0;
        }
    }
    return w;
}

cvec rx_continuous(const Waveform& w, const SubbandConfig& cfg, const FcParams& p) {
    if (w.samples.size() < static_cast<std::size_t>(p.N))
        throw std::invalid_argument("waveform shorter than one FC block");
    const int len = static_cast<int>(w.samples.size());
    const int n_out = (len + p.I - 1) / p.I + p.L;
    const int R_tot = (n_out + p.L_S - 1) / p.L_S;
    const int need = (R_tot - 1) * p.N_S + p.N;
    cvec x(static_cast<std::size_t>(p.N_L + std::max(need - p.N_L, len)), cd{0.0, 0.0});
    for (int t = 0; t < len; ++t) x[static_cast<std::size_t>(p.N_L + t)] = w.samples[static_cast<std::size_t>(t)];
    if (static_cast<int>(x.size()) < need) x.resize(static_cast<std::size_t>(need), cd{0.0, 0.0});

    cvec out(static_cast<std::size_t>(R_tot) * p.L_S, cd{0.0, 0.0});
    const double scale = std::sqrt(static_cast<double>(p.I));
    for (int R = 0; R < R_tot; ++R) {
        cvec y(x.begin() + static_cast<std::ptrdiff_t>(R) * p.N_S,
               x.begin() + static_cast<std::ptrdiff_t>(R) * p.N_S + p.N);
        const cd phase = block_phase(R, cfg.c, p.L_S, p.L);
        cvec z = afb_block_ols(y, cfg, p, phase);
        for (int u = 0; u < p.L_S; ++u)
            out[static_cast<std::size_t>(R * p.L_S + u)] = scale * z[static_cast<std::size_t>(p.L_L + u)];
    }
    return out;
}

} // namespace fcwave
