/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcwave {

/// Deterministic Gaussian stream: a fixed Box-Muller transform over
/// mt19937_64, so identical seeds give bit-identical sequences everywhere.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed);
    double next();      // N(0,1)
    cd next_complex();  // CN(0,1): variance 1/2 per axis
    std::uint64_t next_u64();

  private:
    std::uint64_t s_;
};

/// Derive an independent stream for (seed, index); used for per-drop seeding
/// so Monte-Carlo order cannot change results.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Tapped-delay-line profile: normalized delays scaled by an RMS delay
/// spread, powers normalized to unit total after linearization.
struct TdlProfile {
    struct Tap {
        double delay_ns = 0.0;
        double power_lin = 0.0;
    };
    std::vector<Tap> taps;

    static TdlProfile from_file(const std::string& path, double rms_ds_ns);
    /// Fallback when no data file is available: exponential power-delay
    /// profile sampled every `step_ns`, matching the requested RMS spread.
    static TdlProfile exponential(double rms_ds_ns, double step_ns, int n_taps = 24);
};

/// One fading realization rounded onto the sample grid.
struct ChannelRealization {
    std::vector<int> delays_samples;
    cvec gains;

    /// Frequency response on the n_fft grid (DFT of the tap line).
    cvec frequency_response(int n_fft) const;
};

ChannelRealization draw_tdl(const TdlProfile& profile, double fs_hz, std::uint64_t seed);

/// Linear convolution of the waveform with the tap line (output truncated to
/// the input length; the tail beyond it is dropped).
void apply_channel(Waveform& w, const ChannelRealization& ch);

/// Complex AWGN at the requested Es/N0 per active subcarrier: the noise
/// variance derives from the measured waveform power, the transform size and
/// the total number of active subcarriers. Infinite snr_db is the identity.
void awgn(Waveform& w, double snr_db, int n_fft, int n_active_total, std::uint64_t seed);

/// Noise variance the call above would inject.
double awgn_noise_variance(const Waveform& w, double snr_db, int n_fft, int n_active_total);

/// AWGN with an explicit per-sample complex noise variance.
void awgn_with_variance(Waveform& w, double sigma2, std::uint64_t seed);

/// Mean |x|^2 over [begin, end) of the waveform.
double measure_power(const Waveform& w, std::int64_t begin, std::int64_t end);

/// Delayed sum of per-subband waveforms at equal power; offsets are circular
/// within the common slot buffer.
Waveform multiplex_async(const std::vector<Waveform>& subband_waveforms,
                         const std::vector<int>& offsets_high_rate);

/// One-tap zero-forcing on the active bins; zero-magnitude bins are erased
/// (left untouched) and counted via the return value.
int equalize(cvec& grid_column, const cvec& cfr_at_bins, const std::vector<int>& active_bins);

} // namespace fcwave
