/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/channel.hpp"

#include "fcwave/fft.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fcwave {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

GaussianRng::GaussianRng(std::uint64_t seed) : s_(seed ? seed : 0x1234567890abcdefULL) {}

std::uint64_t GaussianRng::next_u64() { return splitmix64(s_); }

double GaussianRng::next() {
    // one Box-Muller draw per call (cosine branch), uniform in (0,1]
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cd GaussianRng::next_complex() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1p-53;
    const double r = std::sqrt(-std::log(u1));  // variance 1/2 per axis
    return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

TdlProfile TdlProfile::from_file(const std::string& path, double rms_ds_ns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open TDL profile: " + path);
    TdlProfile p;
    std::string line;
    double total = 0.0;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        double delay_norm = 0.0, power_db = 0.0;
        if (!(ls >> delay_norm >> power_db)) continue;
        Tap t;
        t.delay_ns = delay_norm * rms_ds_ns;
        t.power_lin = std::pow(10.0, power_db / 10.0);
        total += t.power_lin;
        p.taps.push_back(t);
    }
    if (p.taps.empty()) throw std::runtime_error("TDL profile has no taps: " + path);
    for (auto& t : p.taps) t.power_lin /= total;
    std::sort(p.taps.begin(), p.taps.end(),
              [](const Tap& a, const Tap& b) { return a.delay_ns < b.delay_ns; });
    return p;
}

TdlProfile TdlProfile::exponential(double rms_ds_ns, double step_ns, int n_taps) {
    if (rms_ds_ns <= 0.0 || step_ns <= 0.0 || n_taps < 1)
        throw std::invalid_argument("invalid exponential profile parameters");
    TdlProfile p;
    double total = 0.0;
    for (int i = 0; i < n_taps; ++i) {
        Tap t;
        t.delay_ns = i * step_ns;
        t.power_lin = std::exp(-t.delay_ns / rms_ds_ns);
        total += t.power_lin;
        p.taps.push_back(t);
    }
    for (auto& t : p.taps) t.power_lin /= total;
    return p;
}

cvec ChannelRealization::frequency_response(int n_fft) const {
    cvec h(static_cast<std::size_t>(n_fft), cd{0.0, 0.0});
    for (std::size_t i = 0; i < gains.size(); ++i) {
        const int d = delays_samples[i] % n_fft;
        h[static_cast<std::size_t>(d)] += gains[i];
    }
    fft::forward(h);
    return h;
}

ChannelRealization draw_tdl(const TdlProfile& profile, double fs_hz, std::uint64_t seed) {
    GaussianRng rng(seed);
    ChannelRealization ch;
    for (const auto& t : profile.taps) {
        ch.delays_samples.push_back(
            static_cast<int>(std::lround(t.delay_ns * 1e-9 * fs_hz)));
        ch.gains.push_back(std::sqrt(t.power_lin) * rng.next_complex());
    }
    return ch;
}

void apply_channel(Waveform& w, const ChannelRealization& ch) {
    const std::size_t n = w.samples.size();
    cvec out(n, cd{0.0, 0.0});
    for (std::size_t k = 0; k < ch.gains.size(); ++k) {
        const int d = ch.delays_samples[k];
        const cd g = ch.gains[k];
        for (std::size_t t = static_cast<std::size_t>(d); t < n; ++t)
            out[t] += g * w.samples[t - static_cast<std::size_t>(d)];
    }
    w.samples = std::move(out);
}

double awgn_noise_variance(const Waveform& w, double snr_db, int n_fft, int n_active_total) {
    if (w.samples.empty()) throw std::invalid_argument("empty waveform");
    double power = 0.0;
    for (const cd& v : w.samples) power += std::norm(v);
    power /= static_cast<double>(w.samples.size());
    // Es per active subcarrier in an n_fft-sample demodulation window is
    // power * n_fft / n_active; flat noise contributes sigma^2 per bin.
    const double es = power * n_fft / n_active_total;
    return es / std::pow(10.0, snr_db / 10.0);
}

void awgn(Waveform& w, double snr_db, int n_fft, int n_active_total, std::uint64_t seed) {
    if (w.samples.empty()) throw std::invalid_argument("empty waveform");
    if (std::isinf(snr_db)) return;
    awgn_with_variance(w, awgn_noise_variance(w, snr_db, n_fft, n_active_total), seed);
}

void awgn_with_variance(Waveform& w, double sigma2, std::uint64_t seed) {
    if (w.samples.empty()) throw std::invalid_argument("empty waveform");
    const double s = std::sqrt(sigma2);
    GaussianRng rng(seed);
    for (cd& v : w.samples) v += s * rng.next_complex();
}

double measure_power(const Waveform& w, std::int64_t begin, std::int64_t end) {
    begin = std::max<std::int64_t>(begin, 0);
    end = std::min<std::int64_t>(end, static_cast<std::int64_t>(w.samples.size()));
    if (end <= begin) throw std::invalid_argument("empty measurement span");
    double p = 0.0;
    for (std::int64_t t = begin; t < end; ++t) p += std::norm(w.samples[static_cast<std::size_t>(t)]);
    return p / static_cast<double>(end - begin);
}

Waveform multiplex_async(const std::vector<Waveform>& subband_waveforms,
                         const std::vector<int>& offsets_high_rate) {
    if (subband_waveforms.empty() || subband_waveforms.size() != offsets_high_rate.size())
        throw std::invalid_argument("one offset per subband waveform required");
    Waveform out = subband_waveforms.front();
    std::size_t n = out.samples.size();
    for (const auto& w : subband_waveforms) n = std::max(n, w.samples.size());
    out.samples.assign(n, cd{0.0, 0.0});
    for (std::size_t m = 0; m < subband_waveforms.size(); ++m) {
        const auto& w = subband_waveforms[m].samples;
        const int off = offsets_high_rate[m];
        for (std::size_t t = 0; t < w.size(); ++t) {
            const std::size_t dst =
                static_cast<std::size_t>((static_cast<std::int64_t>(t) + off % static_cast<std::int64_t>(n) +
                                          static_cast<std::int64_t>(n)) %
                                         static_cast<std::int64_t>(n));
            out.samples[dst] += w[t];
        }
    }
    return out;
}

int equalize(cvec& grid_column, const cvec& cfr_at_bins, const std::vector<int>& active_bins) {
    if (cfr_at_bins.size() != active_bins.size())
        throw std::invalid_argument("one CFR value per active bin required");
    int erased = 0;
    for (std::size_t i = 0; i < active_bins.size(); ++i) {
        const cd h = cfr_at_bins[i];
        if (std::abs(h) <= 0.0) {
            ++erased;
            continue;
        }
        grid_column[static_cast<std::size_t>(active_bins[i])] /= h;
    }
    return erased;
}

} // namespace fcwave
