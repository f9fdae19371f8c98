/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/scenario.hpp"

#include "fcwave/fc_core.hpp"
#include "fcwave/fc_sync.hpp"
#include "fcwave/fft.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fcwave {

using nlohmann::json;

namespace {

Modulation parse_mod(const std::string& s) {
    if (s == "qpsk") return Modulation::QPSK;
    if (s == "16qam") return Modulation::QAM16;
    if (s == "64qam") return Modulation::QAM64;
    throw std::invalid_argument("modulation must be qpsk|16qam|64qam, got '" + s + "'");
}

std::string mod_name(Modulation m) {
    switch (m) {
        case Modulation::QPSK: return "qpsk";
        case Modulation::QAM16: return "16qam";
        case Modulation::QAM64: return "64qam";
    }
    return "qpsk";
}

TxKind parse_tx(const std::string& s) {
    if (s == "none") return TxKind::None;
    if (s == "continuous") return TxKind::Continuous;
    if (s == "discontinuous") return TxKind::Discontinuous;
    throw std::invalid_argument("filtering.tx must be none|continuous|discontinuous");
}

RxKind parse_rx(const std::string& s) {
    if (s == "none") return RxKind::None;
    if (s == "continuous") return RxKind::Continuous;
    if (s == "discontinuous") return RxKind::Discontinuous;
    throw std::invalid_argument("filtering.rx must be none|continuous|discontinuous");
}

std::string tx_name(TxKind k) {
    return k == TxKind::None ? "none" : (k == TxKind::Continuous ? "continuous" : "discontinuous");
}
std::string rx_name(RxKind k) {
    return k == RxKind::None ? "none" : (k == RxKind::Continuous ? "continuous" : "discontinuous");
}

template <typename T>
T require(const json& j, const std::string& key) {
    if (!j.contains(key)) throw std::invalid_argument("scenario field missing: " + key);
    try {
        return j.at(key).get<T>();
    } catch (const std::exception&) {
        throw std::invalid_argument("scenario field has wrong type: " + key);
    }
}

/// Signed subcarrier offsets of the active set around the subband centre
/// (centre bin itself never carries data).
std::vector<int> active_offsets(int n_active) {
    std::vector<int> ls;
    const int half = n_active / 2;
    for (int v = -half; v <= -1; ++v) ls.push_back(v);
    for (int v = 1; v <= n_active - half; ++v) ls.push_back(v);
    return ls;
}

SubbandConfig make_cfg(const SubbandSpec& sb, int L, int n_fft) {
    SubbandConfig cfg;
    cfg.L = L;
    cfg.l_ofdm = L;
    cfg.c = sb.center_bin;
    cfg.n_active = sb.n_active;
    cfg.n_tb = sb.n_tb;
    const auto ls = active_offsets(sb.n_active);
    const int span = ls.back() - ls.front() + 1;
    const int n_pass = std::max(12 * sb.n_prb, span);
    if (n_pass + 2 * sb.n_tb > L)
        throw std::invalid_argument("subband window does not fit the transform size");
    cfg.window = design_window(L, n_pass, sb.n_tb);
    (void)n_fft;
    return cfg;
}

struct TxOutput {
    Waveform waveform;
    // reference QAM values per symbol in active-offset order
    std::vector<cvec> ref;
    std::vector<std::uint8_t> bits;  // concatenated, symbol-major
};

std::vector<cvec> draw_grid_values(Modulation mod, int n_active, int n_symbols,
                                   std::uint64_t seed, std::vector<std::uint8_t>* bits_out) {
    GaussianRng rng(seed);
    const int k = bits_per_symbol(mod);
    std::vector<cvec> vals(static_cast<std::size_t>(n_symbols));
    for (int n = 0; n < n_symbols; ++n) {
        vals[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n_active));
        for (int a = 0; a < n_active; ++a) {
            unsigned sym = 0;
            for (int b = 0; b < k; ++b) {
                const unsigned bit = static_cast<unsigned>(rng.next_u64() & 1u);
                sym |= bit << b;
                if (bits_out) bits_out->push_back(static_cast<std::uint8_t>(bit));
            }
            vals[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] = qam_map(mod, sym);
        }
    }
    return vals;
}

QamGrid values_to_grid(const std::vector<cvec>& vals, const std::vector<int>& ls, int l_ofdm) {
    QamGrid g;
    g.l_ofdm = l_ofdm;
    for (int v : ls) g.active_map.push_back(((v % l_ofdm) + l_ofdm) % l_ofdm);
    for (const cvec& col : vals) {
        cvec full(static_cast<std::size_t>(l_ofdm), cd{0.0, 0.0});
        for (std::size_t a = 0; a < col.size(); ++a)
            full[static_cast<std::size_t>(g.active_map[a])] = col[a];
        g.symbols.push_back(std::move(full));
    }
    return g;
}

TxOutput tx_subband(const Scenario& s, const SubbandSpec& sb, const CpSchedule& cps,
                    std::uint64_t bits_seed, bool keep_bits) {
    TxOutput out;
    const int B = s.slot_symbols;
    const int N = s.n_fft;
    const auto ls = active_offsets(sb.n_active);
    out.ref = draw_grid_values(s.modulation, sb.n_active, B, bits_seed,
                               keep_bits ? &out.bits : nullptr);
    const double fs = make_numerology(s.scs_khz, s.n_fft).fs_hz();

    if (s.tx == TxKind::Discontinuous) {
        QamGrid grid = values_to_grid(out.ref, ls, sb.l_tx);
        SubbandConfig cfg = make_cfg(sb, sb.l_tx, N);
        out.waveform = tx_discontinuous({grid}, {cfg}, cps, N, s.overlap, fs);
    } else if (s.tx == TxKind::Continuous) {
        QamGrid grid = values_to_grid(out.ref, ls, sb.l_tx);
        SubbandConfig cfg = make_cfg(sb, sb.l_tx, N);
        const FcParams p = derive_fc_params(N, sb.l_tx, s.overlap);
        std::vector<int> lcp(static_cast<std::size_t>(B));
        for (int n = 0; n < B; ++n) {
            const int ncp = cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            if (ncp % p.I != 0)
                throw std::invalid_argument("continuous TX needs integer low-rate CP; raise l_tx");
            lcp[static_cast<std::size_t>(n)] = ncp / p.I;
        }
        CpOfdmSignal sig = build_cp_ofdm(grid, lcp);
        out.waveform = tx_continuous({sig}, {cfg}, N, s.overlap, fs);
    } else {
        // plain CP-OFDM straight at the high rate
        Waveform w;
        w.fs_hz = fs;
        const std::int64_t lead = N;  // room for FC receivers' leading overlap
        w.useful0 = lead + cps.per_symbol_high_rate.front();
        std::int64_t total = w.useful0 + static_cast<std::int64_t>(B) * N;
        for (int n = 1; n < B; ++n) total += cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
        w.samples.assign(static_cast<std::size_t>(total), cd{0.0, 0.0});
        const double scale = std::sqrt(static_cast<double>(N));
        std::int64_t cum = 0;
        for (int n = 0; n < B; ++n) {
            if (n > 0) cum += cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            cvec grid_n(static_cast<std::size_t>(N), cd{0.0, 0.0});
            for (std::size_t a = 0; a < ls.size(); ++a) {
                const int q = ((sb.center_bin + ls[a]) % N + N) % N;
                grid_n[static_cast<std::size_t>(q)] = out.ref[static_cast<std::size_t>(n)][a];
            }
            fft::inverse(grid_n);
            const std::int64_t start = w.useful0 + static_cast<std::int64_t>(n) * N + cum;
            const int ncp = cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            for (int t = 0; t < N; ++t)
                w.samples[static_cast<std::size_t>(start + t)] += scale * grid_n[static_cast<std::size_t>(t)];
            for (int t = 0; t < ncp; ++t)
                w.samples[static_cast<std::size_t>(start - ncp + t)] +=
                    scale * grid_n[static_cast<std::size_t>(N - ncp + t)];
        }
        out.waveform = std::move(w);
    }
    return out;
}

/// Demodulated active-bin values per symbol for the target subband.
std::vector<cvec> rx_target(const Scenario& s, const Waveform& w, const SubbandSpec& sb,
                            const CpSchedule& cps) {
    const int N = s.n_fft;
    const int B = s.slot_symbols;
    const auto ls = active_offsets(sb.n_active);
    std::vector<cvec> cols(static_cast<std::size_t>(B));

    if (s.rx == RxKind::None) {
        std::int64_t cum = 0;
        for (int n = 0; n < B; ++n) {
            if (n > 0) cum += cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            const std::int64_t start = w.useful0 + static_cast<std::int64_t>(n) * N + cum;
            cvec win(w.samples.begin() + start, w.samples.begin() + start + N);
            cvec spec = ofdm_demodulate(win);
            cvec& col = cols[static_cast<std::size_t>(n)];
            col.resize(ls.size());
            for (std::size_t a = 0; a < ls.size(); ++a)
                col[a] = spec[static_cast<std::size_t>(((sb.center_bin + ls[a]) % N + N) % N)];
        }
    } else if (s.rx == RxKind::Continuous) {
        SubbandConfig cfg = make_cfg(sb, sb.l_rx, N);
        const FcParams p = derive_fc_params(N, sb.l_rx, s.overlap);
        const cvec y = rx_continuous(w, cfg, p);
        std::int64_t cum = 0;
        for (int n = 0; n < B; ++n) {
            if (n > 0) cum += cps.per_symbol_high_rate[static_cast<std::size_t>(n)];
            const std::int64_t pos_hi = w.useful0 + static_cast<std::int64_t>(n) * N + cum;
            if (pos_hi % p.I != 0)
                throw std::invalid_argument("continuous RX demodulation window is fractional; raise l_rx");
            const std::int64_t u = pos_hi / p.I;
            cvec win(y.begin() + u, y.begin() + u + sb.l_rx);
            cvec spec = ofdm_demodulate(win);
            cvec& col = cols[static_cast<std::size_t>(n)];
            col.resize(ls.size());
            for (std::size_t a = 0; a < ls.size(); ++a)
                col[a] = spec[static_cast<std::size_t>(((ls[a] % sb.l_rx) + sb.l_rx) % sb.l_rx)];
        }
    } else {
        SubbandConfig cfg = make_cfg(sb, sb.l_rx, N);
        std::vector<cvec> grids = rx_discontinuous(w, cfg, cps, N, s.overlap, s.rx_simplified);
        for (int n = 0; n < B; ++n) {
            cvec& col = cols[static_cast<std::size_t>(n)];
            col.resize(ls.size());
            for (std::size_t a = 0; a < ls.size(); ++a)
                col[a] = grids[static_cast<std::size_t>(n)]
                              [static_cast<std::size_t>(((ls[a] % sb.l_rx) + sb.l_rx) % sb.l_rx)];
        }
    }
    return cols;
}

struct DropPartial {
    std::vector<std::int64_t> bit_errors;
    std::vector<double> evm_num, evm_den;
    std::vector<int> erasures;
};

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("scenario JSON parse error: ") + e.what());
    }
    Scenario s;
    s.id = require<std::string>(j, "id");
    const json& num = j.contains("numerology") ? j.at("numerology") : json::object();
    s.scs_khz = num.value("scs_khz", 15);
    s.n_fft = num.value("n_fft", 1024);
    s.slot_symbols = j.value("slot_symbols", 7);
    s.modulation = parse_mod(require<std::string>(j, "modulation"));
    const json& f = j.contains("filtering") ? j.at("filtering") : json::object();
    s.tx = parse_tx(f.value("tx", "discontinuous"));
    s.rx = parse_rx(f.value("rx", "discontinuous"));
    s.rx_simplified = f.value("rx_simplified", false);
    s.overlap = f.value("lambda", 0.5);
    s.config_id = f.value("id", 0);
    const json& ch = j.contains("channel") ? j.at("channel") : json::object();
    const std::string ct = ch.value("type", "awgn");
    if (ct == "awgn")
        s.channel = ChannelKind::Awgn;
    else if (ct == "tdl")
        s.channel = ChannelKind::Tdl;
    else
        throw std::invalid_argument("channel.type must be awgn|tdl");
    s.tdl_profile = ch.value("profile", "");
    s.rms_ds_ns = ch.value("rms_ds_ns", 300.0);
    const json& sy = j.contains("sync") ? j.at("sync") : json::object();
    const std::string sm = sy.value("mode", "sync");
    if (sm != "sync" && sm != "async") throw std::invalid_argument("sync.mode must be sync|async");
    s.async_mode = sm == "async";
    s.async_offset = sy.value("offset_samples", 0);
    s.snr_db = require<std::vector<double>>(j, "snr_db");
    if (s.snr_db.empty()) throw std::invalid_argument("snr_db must be non-empty");
    s.drops = j.value("drops", 8);
    if (s.drops < 1) throw std::invalid_argument("drops must be >= 1");
    s.seed = j.value("seed", 1ULL);
    s.target_subband = j.value("target_subband", 0);
    if (!j.contains("subbands") || !j.at("subbands").is_array() || j.at("subbands").empty())
        throw std::invalid_argument("scenario field missing: subbands");
    for (const json& sbj : j.at("subbands")) {
        SubbandSpec sb;
        sb.n_prb = require<int>(sbj, "prb");
        sb.n_active = require<int>(sbj, "active");
        sb.center_bin = require<int>(sbj, "center_bin");
        sb.n_tb = sbj.value("n_tb", 2);
        sb.l_tx = sbj.value("l_tx", 128);
        sb.l_rx = sbj.value("l_rx", 128);
        s.subbands.push_back(sb);
    }
    if (s.target_subband < 0 || s.target_subband >= static_cast<int>(s.subbands.size()))
        throw std::invalid_argument("target_subband out of range");

    // active allocations must be disjoint and clear of every other
    // subband's passband; transition bins of adjacent subbands may overlap
    // (the bin mapping accumulates them).
    std::vector<std::pair<int, int>> act_spans, pass_spans;
    for (const auto& sb : s.subbands) {
        const auto ls = active_offsets(sb.n_active);
        act_spans.emplace_back(sb.center_bin + ls.front(), sb.center_bin + ls.back());
        const int span = ls.back() - ls.front() + 1;
        const int n_pass = std::max(12 * sb.n_prb, span);
        pass_spans.emplace_back(sb.center_bin - n_pass / 2,
                                sb.center_bin + (n_pass - n_pass / 2 - 1));
    }
    for (std::size_t i = 0; i < act_spans.size(); ++i) {
        for (std::size_t j = 0; j < act_spans.size(); ++j) {
            if (i == j) continue;
            if (act_spans[i].first <= act_spans[j].second &&
                act_spans[j].first <= act_spans[i].second)
                throw std::invalid_argument("subband active allocations overlap");
            if (pass_spans[i].first <= act_spans[j].second &&
                act_spans[j].first <= pass_spans[i].second)
                throw std::invalid_argument(
                    "subband passband overlaps another subband's active allocation");
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["id"] = s.id;
    j["numerology"] = {{"scs_khz", s.scs_khz}, {"n_fft", s.n_fft}};
    j["slot_symbols"] = s.slot_symbols;
    j["modulation"] = mod_name(s.modulation);
    j["filtering"] = {{"tx", tx_name(s.tx)},
                      {"rx", rx_name(s.rx)},
                      {"rx_simplified", s.rx_simplified},
                      {"lambda", s.overlap},
                      {"id", s.config_id}};
    j["channel"] = {{"type", s.channel == ChannelKind::Awgn ? "awgn" : "tdl"},
                    {"profile", s.tdl_profile},
                    {"rms_ds_ns", s.rms_ds_ns}};
    j["sync"] = {{"mode", s.async_mode ? "async" : "sync"}, {"offset_samples", s.async_offset}};
    j["snr_db"] = s.snr_db;
    j["drops"] = s.drops;
    j["seed"] = s.seed;
    j["target_subband"] = s.target_subband;
    j["subbands"] = json::array();
    for (const auto& sb : s.subbands)
        j["subbands"].push_back({{"prb", sb.n_prb},
                                 {"active", sb.n_active},
                                 {"center_bin", sb.center_bin},
                                 {"n_tb", sb.n_tb},
                                 {"l_tx", sb.l_tx},
                                 {"l_rx", sb.l_rx}});
    return j.dump(2);
}

ResultTable run_scenario(const Scenario& s) {
    if (s.drops < 1) throw std::invalid_argument("drops must be >= 1");
    if (s.snr_db.empty()) throw std::invalid_argument("snr_db must be non-empty");
    if (s.subbands.empty()) throw std::invalid_argument("no subbands");
    const int B = s.slot_symbols;
    const int N = s.n_fft;
    const Numerology num = make_numerology(s.scs_khz, s.n_fft);
    const CpSchedule cps = cp_schedule(num, B);
    const SubbandSpec& target = s.subbands[static_cast<std::size_t>(s.target_subband)];
    const auto target_ls = active_offsets(target.n_active);
    const int n_snr = static_cast<int>(s.snr_db.size());

    std::int64_t act_total = 0;
    for (const auto& sb : s.subbands) act_total += sb.n_active;

    TdlProfile profile;
    if (s.channel == ChannelKind::Tdl) {
        profile = s.tdl_profile.empty()
                      ? TdlProfile::exponential(s.rms_ds_ns, 1e9 / num.fs_hz())
                      : TdlProfile::from_file(s.tdl_profile, s.rms_ds_ns);
    }

    // high-rate span of the slot's useful content, for power measurement
    std::int64_t slot_hi = static_cast<std::int64_t>(B) * N;
    for (int n = 1; n < B; ++n) slot_hi += cps.per_symbol_high_rate[static_cast<std::size_t>(n)];

    const bool tx_coherent = s.tx != TxKind::None;
    const bool rx_coherent = s.rx != RxKind::None;

    auto run_drop = [&](int drop) {
        DropPartial part;
        part.bit_errors.assign(static_cast<std::size_t>(n_snr), 0);
        part.evm_num.assign(static_cast<std::size_t>(n_snr), 0.0);
        part.evm_den.assign(static_cast<std::size_t>(n_snr), 0.0);
        part.erasures.assign(static_cast<std::size_t>(n_snr), 0);

        // per-subband TX and channel
        std::vector<Waveform> waves;
        std::vector<int> offsets;
        TxOutput target_tx;
        cvec target_cfr(target_ls.size(), cd{1.0, 0.0});
        for (std::size_t m = 0; m < s.subbands.size(); ++m) {
            const bool is_target = static_cast<int>(m) == s.target_subband;
            TxOutput t = tx_subband(s, s.subbands[m], cps,
                                    derive_seed(s.seed, 1000ULL * drop + m), is_target);
            if (s.channel == ChannelKind::Tdl) {
                const ChannelRealization ch =
                    draw_tdl(profile, num.fs_hz(), derive_seed(s.seed, 1000ULL * drop + 100 + m));
                apply_channel(t.waveform, ch);
                if (is_target) {
                    const cvec h = ch.frequency_response(N);
                    for (std::size_t a = 0; a < target_ls.size(); ++a)
                        target_cfr[a] =
                            h[static_cast<std::size_t>(((target.center_bin + target_ls[a]) % N + N) % N)];
                }
            }
            offsets.push_back(is_target || !s.async_mode ? 0 : s.async_offset);
            if (is_target) target_tx = std::move(t);
            if (static_cast<int>(m) == s.target_subband)
                waves.push_back(target_tx.waveform);
            else
                waves.push_back(std::move(t.waveform));
        }
        // common buffer big enough for every receiver window
        std::int64_t need = 0;
        for (const auto& w : waves)
            need = std::max(need, static_cast<std::int64_t>(w.samples.size()));
        need = std::max(need, waves[static_cast<std::size_t>(s.target_subband)].useful0 + slot_hi + 2 * N);
        for (auto& w : waves) w.samples.resize(static_cast<std::size_t>(need), cd{0.0, 0.0});
        Waveform mux = multiplex_async(waves, offsets);
        mux.useful0 = waves[static_cast<std::size_t>(s.target_subband)].useful0;

        const double core_power = measure_power(mux, mux.useful0, mux.useful0 + slot_hi);

        const int kbits = bits_per_symbol(s.modulation);
        for (int si = 0; si < n_snr; ++si) {
            Waveform noisy = mux;
            if (!std::isinf(s.snr_db[static_cast<std::size_t>(si)])) {
                const double es = core_power * N / static_cast<double>(act_total);
                const double sigma2 =
                    es / std::pow(10.0, s.snr_db[static_cast<std::size_t>(si)] / 10.0);
                awgn_with_variance(noisy, sigma2,
                                   derive_seed(s.seed, 1000ULL * drop + 200 + static_cast<std::uint64_t>(si)));
            }
            std::vector<cvec> cols = rx_target(s, noisy, target, cps);
            std::size_t bit_idx = 0;
            for (int n = 0; n < B; ++n) {
                cd corr{1.0, 0.0};
                if (tx_coherent != rx_coherent) {
                    const cd theta = symbol_phase(n, target.center_bin, cps, N);
                    corr = tx_coherent ? std::conj(theta) : theta;
                }
                cvec& col = cols[static_cast<std::size_t>(n)];
                for (std::size_t a = 0; a < target_ls.size(); ++a) {
                    cd v = col[a] * corr;
                    const cd h = target_cfr[a];
                    if (std::abs(h) > 0.0)
                        v /= h;
                    else
                        ++part.erasures[static_cast<std::size_t>(si)];
                    const cd ref = target_tx.ref[static_cast<std::size_t>(n)][a];
                    part.evm_num[static_cast<std::size_t>(si)] += std::norm(v - ref);
                    part.evm_den[static_cast<std::size_t>(si)] += std::norm(ref);
                    const unsigned rx_sym = qam_demap(s.modulation, v);
                    for (int b = 0; b < kbits; ++b) {
                        const std::uint8_t tx_bit = target_tx.bits[bit_idx + static_cast<std::size_t>(b)];
                        const std::uint8_t rx_bit = static_cast<std::uint8_t>((rx_sym >> b) & 1u);
                        if (tx_bit != rx_bit) ++part.bit_errors[static_cast<std::size_t>(si)];
                    }
                    bit_idx += static_cast<std::size_t>(kbits);
                }
            }
        }
        return part;
    };

    // drops fan out across workers; reduction is in fixed drop order
    std::vector<DropPartial> parts(static_cast<std::size_t>(s.drops));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_workers = std::min<unsigned>(hw, static_cast<unsigned>(s.drops));
    std::vector<std::future<void>> futs;
    std::atomic<int> next_drop{0};
    for (unsigned t = 0; t < n_workers; ++t) {
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const int d = next_drop.fetch_add(1);
                if (d >= s.drops) break;
                parts[static_cast<std::size_t>(d)] = run_drop(d);
            }
        }));
    }
    for (auto& f : futs) f.get();

    ResultTable table;
    table.scenario_id = s.id;
    table.config_id = s.config_id;
    const std::int64_t bits_per_drop =
        static_cast<std::int64_t>(B) * target.n_active * bits_per_symbol(s.modulation);
    for (int si = 0; si < n_snr; ++si) {
        SnrResult r;
        r.snr_db = s.snr_db[static_cast<std::size_t>(si)];
        double num_e = 0.0, den_e = 0.0;
        for (int d = 0; d < s.drops; ++d) {
            r.bit_errors += parts[static_cast<std::size_t>(d)].bit_errors[static_cast<std::size_t>(si)];
            num_e += parts[static_cast<std::size_t>(d)].evm_num[static_cast<std::size_t>(si)];
            den_e += parts[static_cast<std::size_t>(d)].evm_den[static_cast<std::size_t>(si)];
            r.erasures += parts[static_cast<std::size_t>(d)].erasures[static_cast<std::size_t>(si)];
        }
        r.bits = bits_per_drop * s.drops;
        r.ber = static_cast<double>(r.bit_errors) / static_cast<double>(r.bits);
        r.evm_db = num_e <= 0.0 ? 300.0 : std::min(300.0, -10.0 * std::log10(num_e / den_e));
        table.rows.push_back(r);
    }

    // complexity of the receive chain for this configuration
    std::vector<SubbandGeometry> geos;
    for (const auto& sb : s.subbands) {
        SubbandGeometry g;
        g.L = s.rx == RxKind::None ? sb.l_tx : sb.l_rx;
        g.l_ofdm = g.L;
        g.n_tb = sb.n_tb;
        g.n_active = sb.n_active;
        geos.push_back(g);
    }
    const FcMode mode = (s.rx == RxKind::Discontinuous ||
                         (s.rx == RxKind::None && s.tx == TxKind::Discontinuous))
                            ? FcMode::Discontinuous
                            : FcMode::Continuous;
    try {
        table.complexity = complexity(geos, N, B, mode, s.overlap, s.rx_simplified, cps);
    } catch (const std::exception&) {
        table.complexity = ComplexityReport{};  // e.g. fractional CP in continuous mode
    }
    return table;
}

std::string results_to_csv(const ResultTable& t) {
    std::string out = "scenario,config_id,snr_db,ber,bit_errors,bits,evm_db,erasures\n";
    char buf[256];
    for (const auto& r : t.rows) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.10g,%.10g,%lld,%lld,%.10g,%d\n",
                      t.scenario_id.c_str(), t.config_id, r.snr_db, r.ber,
                      static_cast<long long>(r.bit_errors), static_cast<long long>(r.bits),
                      r.evm_db, r.erasures);
        out += buf;
    }
    return out;
}

void write_csv(const ResultTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out << results_to_csv(t);
}

void write_ber_plot(const ResultTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write plot: " + path);
    const double W = 640, H = 480, ml = 70, mr = 20, mt = 30, mb = 50;
    double xmin = 1e300, xmax = -1e300;
    for (const auto& r : t.rows) {
        xmin = std::min(xmin, r.snr_db);
        xmax = std::max(xmax, r.snr_db);
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    const double ymin_log = -6.0, ymax_log = 0.0;
    auto xmap = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto ymap = [&](double ber) {
        const double l = std::max(ymin_log, std::min(ymax_log, std::log10(std::max(ber, 1e-12))));
        return mt + (ymax_log - l) / (ymax_log - ymin_log) * (H - mt - mb);
    };
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    for (int d = 0; d >= -6; --d) {
        const double y = ymap(std::pow(10.0, d));
        out << "<line x1='" << ml << "' y1='" << y << "' x2='" << W - mr << "' y2='" << y
            << "' stroke='#ddd'/>\n<text x='8' y='" << y + 4 << "' font-size='12'>1e" << d
            << "</text>\n";
    }
    out << "<text x='" << W / 2 << "' y='" << H - 12
        << "' font-size='13' text-anchor='middle'>SNR (dB)</text>\n";
    out << "<text x='" << W / 2 << "' y='18' font-size='13' text-anchor='middle'>"
        << t.scenario_id << " - uncoded BER</text>\n";
    out << "<polyline fill='none' stroke='#1f77b4' stroke-width='2' points='";
    for (const auto& r : t.rows) out << xmap(r.snr_db) << "," << ymap(r.ber) << " ";
    out << "'/>\n";
    for (const auto& r : t.rows)
        out << "<circle cx='" << xmap(r.snr_db) << "' cy='" << ymap(r.ber)
            << "' r='3' fill='#1f77b4'/>\n";
    out << "</svg>\n";
}

namespace {
Scenario base_scenario(const std::string& id, Modulation mod, ChannelKind chan, double rms,
                       bool async_mode) {
    Scenario s;
    s.id = id;
    s.modulation = mod;
    s.channel = chan;
    s.rms_ds_ns = rms;
    s.tdl_profile = chan == ChannelKind::Tdl ? "data/tdl_c.txt" : "";
    s.async_mode = async_mode;
    s.async_offset = async_mode ? 256 : 0;
    s.snr_db = {0, 5, 10, 15, 20, 25, 30, 35, 40};
    s.drops = 20;
    s.seed = 1;
    return s;
}
} // namespace

std::vector<Scenario> narrowband_scenarios(int n_prb, ChannelKind chan, double rms_ds_ns,
                                           bool async_mode, Modulation mod) {
    // three adjacent subbands, BER evaluated on the middle one
    const int n_active = n_prb == 1 ? 8 : 44;
    const int width = 12 * n_prb;
    const int l_small = n_prb == 1 ? 16 : 64;
    std::vector<Scenario> all;
    for (int cfg = 1; cfg <= 6; ++cfg) {
        Scenario s = base_scenario("nb" + std::to_string(n_prb) + "_cfg" + std::to_string(cfg),
                                   mod, chan, rms_ds_ns, async_mode);
        s.config_id = cfg;
        for (int m = -1; m <= 1; ++m) {
            SubbandSpec sb;
            sb.n_prb = n_prb;
            sb.n_active = n_active;
            sb.center_bin = 512 + m * width;
            sb.n_tb = 2;
            sb.l_rx = 128;
            sb.l_tx = 128;
            s.subbands.push_back(sb);
        }
        s.target_subband = 1;
        switch (cfg) {
            case 1:
                s.tx = TxKind::None;
                s.rx = RxKind::None;
                break;
            case 2:
                s.tx = TxKind::None;
                s.rx = RxKind::Continuous;
                break;
            case 3:
                s.tx = TxKind::Continuous;
                s.rx = RxKind::Continuous;
                break;
            case 4:
                s.tx = TxKind::Discontinuous;
                s.rx = RxKind::Continuous;
                break;
            case 5:
                s.tx = TxKind::Discontinuous;
                s.rx = RxKind::Continuous;
                for (auto& sb : s.subbands) sb.l_tx = l_small;
                break;
            case 6:
                s.tx = TxKind::Discontinuous;
                s.rx = RxKind::Discontinuous;
                for (auto& sb : s.subbands) sb.l_tx = l_small;
                break;
        }
        all.push_back(std::move(s));
    }
    return all;
}

std::vector<Scenario> wideband_scenarios(ChannelKind chan, double rms_ds_ns, Modulation mod) {
    std::vector<Scenario> all;
    for (int cfg = 1; cfg <= 4; ++cfg) {
        Scenario s = base_scenario("wb_cfg" + std::to_string(cfg), mod, chan, rms_ds_ns, false);
        s.config_id = cfg;
        SubbandSpec sb;
        sb.n_prb = 52;
        sb.n_active = 624;
        sb.center_bin = 512;
        sb.n_tb = 4;
        sb.l_tx = 1024;
        sb.l_rx = 1024;
        s.subbands.push_back(sb);
        s.target_subband = 0;
        switch (cfg) {
            case 1:
                s.tx = TxKind::Continuous;
                s.rx = RxKind::Continuous;
                break;
            case 2:
                s.tx = TxKind::Continuous;
                s.rx = RxKind::Discontinuous;
                break;
            case 3:
                s.tx = TxKind::Discontinuous;
                s.rx = RxKind::Continuous;
                break;
            case 4:
                s.tx = TxKind::Discontinuous;
                s.rx = RxKind::Discontinuous;
                break;
        }
        all.push_back(std::move(s));
    }
    return all;
}

} // namespace fcwave
