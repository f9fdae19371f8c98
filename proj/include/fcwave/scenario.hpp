/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "fcwave/channel.hpp"
#include "fcwave/metrics.hpp"
#include "fcwave/numerology.hpp"
#include "fcwave/ofdm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcwave {

enum class TxKind { None, Continuous, Discontinuous };
enum class RxKind { None, Continuous, Discontinuous };
enum class ChannelKind { Awgn, Tdl };

struct SubbandSpec {
    int n_prb = 1;
    int n_active = 8;
    int center_bin = 0;
    int n_tb = 2;
    int l_tx = 16;
    int l_rx = 128;
};

struct Scenario {
    std::string id;
    int scs_khz = 15;
    int n_fft = 1024;
    int slot_symbols = 7;
    Modulation modulation = Modulation::QPSK;
    TxKind tx = TxKind::Discontinuous;
    RxKind rx = RxKind::Discontinuous;
    bool rx_simplified = false;
    double overlap = 0.5;
    ChannelKind channel = ChannelKind::Awgn;
    std::string tdl_profile;   // path; empty selects the exponential fallback
    double rms_ds_ns = 300.0;
    bool async_mode = false;
    int async_offset = 0;      // high-rate samples applied to non-target subbands
    std::vector<double> snr_db;
    int drops = 8;
    std::uint64_t seed = 1;
    int target_subband = 0;
    std::vector<SubbandSpec> subbands;
    int config_id = 0;         // scenario/figure bookkeeping only
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);
std::string scenario_to_json(const Scenario& s);

struct SnrResult {
    double snr_db = 0.0;
    std::int64_t bit_errors = 0;
    std::int64_t bits = 0;
    double ber = 0.0;
    double evm_db = 0.0;  // positive suppression dB
    int erasures = 0;
};

struct ResultTable {
    std::string scenario_id;
    int config_id = 0;
    std::vector<SnrResult> rows;
    ComplexityReport complexity;
};

ResultTable run_scenario(const Scenario& s);

/// CSV (header + one row per SNR point). Byte-stable for a fixed table.
std::string results_to_csv(const ResultTable& t);
void write_csv(const ResultTable& t, const std::string& path);
/// Simple SVG line plot of BER vs SNR (log-y).
void write_ber_plot(const ResultTable& t, const std::string& path);

/// Frozen scenario grids matching the narrow-band (six filtering configs)
/// and wide-band (four) experiment tables.
std::vector<Scenario> narrowband_scenarios(int n_prb, ChannelKind chan, double rms_ds_ns,
                                           bool async_mode, Modulation mod);
std::vector<Scenario> wideband_scenarios(ChannelKind chan, double rms_ds_ns, Modulation mod);

} // namespace fcwave
