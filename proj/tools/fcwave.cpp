/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/metrics.hpp"
#include "fcwave/numerology.hpp"
#include "fcwave/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace fcwave;

namespace {

int cmd_run(const std::string& scenario_path, const std::string& out_dir, int drops_override,
            long long seed_override, bool no_plots) {
    Scenario s = load_scenario(scenario_path);
    if (drops_override > 0) s.drops = drops_override;
    if (seed_override >= 0) s.seed = static_cast<std::uint64_t>(seed_override);
    fs::create_directories(out_dir);

    ResultTable t = run_scenario(s);
    const fs::path csv = fs::path(out_dir) / (s.id + ".csv");
    write_csv(t, csv.string());
    std::cout << "wrote " << csv.string() << "\n";
    if (!no_plots) {
        const fs::path svg = fs::path(out_dir) / (s.id + "_ber.svg");
        write_ber_plot(t, svg.string());
        std::cout << "wrote " << svg.string() << "\n";
    }
    for (const auto& r : t.rows)
        std::printf("  snr %6.2f dB  ber %.3e (%lld/%lld)  evm %.1f dB\n", r.snr_db, r.ber,
                    static_cast<long long>(r.bit_errors), static_cast<long long>(r.bits),
                    r.evm_db);
    if (t.complexity.N != 0)
        std::printf("  complexity: %.1f real mults per QAM symbol (alpha=%.3f, beta=%.1f)\n",
                    t.complexity.c_per_qam.value(), t.complexity.alpha.value(),
                    t.complexity.beta);
    return 0;
}

struct GridConfig {
    std::string name;
    std::vector<SubbandGeometry> disc;
    std::vector<SubbandGeometry> cont;
};

int cmd_complexity_grid(const std::string& out_path) {
    const Numerology num = make_numerology(15, 1024);
    const CpSchedule cps = cp_schedule(num, 14);

    auto rep = [](int L, int n_tb, int n_active) {
        return SubbandGeometry{L, L, n_tb, n_active};
    };
    std::vector<GridConfig> grid;
    grid.push_back({"3x1prb", std::vector<SubbandGeometry>(3, rep(16, 2, 8)),
                    std::vector<SubbandGeometry>(3, rep(128, 2, 8))});
    grid.push_back({"3x4prb", std::vector<SubbandGeometry>(3, rep(64, 2, 44)),
                    std::vector<SubbandGeometry>(3, rep(128, 2, 44))});
    grid.push_back({"52x1prb", std::vector<SubbandGeometry>(52, rep(16, 2, 8)),
                    std::vector<SubbandGeometry>(52, rep(128, 2, 8))});
    grid.push_back({"1x52prb", std::vector<SubbandGeometry>(1, rep(1024, 4, 624)),
                    std::vector<SubbandGeometry>(1, rep(1024, 4, 624))});

    std::string csv = "config,scheme,slot_len,c_per_qam,num,den\n";
    char buf[256];
    for (const auto& g : grid) {
        for (int slot = 1; slot <= 14; ++slot) {
            struct Row {
                const char* scheme;
                ComplexityReport rep;
            };
            std::vector<Row> rows;
            rows.push_back({"cont_l025", complexity(g.cont, 1024, slot, FcMode::Continuous, 0.25,
                                                    false, cps)});
            rows.push_back({"cont_l050", complexity(g.cont, 1024, slot, FcMode::Continuous, 0.5,
                                                    false, cps)});
            rows.push_back({"disc_direct", complexity(g.disc, 1024, slot, FcMode::Discontinuous,
                                                      0.5, false, cps)});
            rows.push_back({"disc_simplified", complexity(g.disc, 1024, slot,
                                                          FcMode::Discontinuous, 0.5, true, cps)});
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%s,%s,%d,%.6f,%lld,%lld\n", g.name.c_str(),
                              r.scheme, slot, r.rep.c_per_qam.value(),
                              static_cast<long long>(r.rep.c_per_qam.num),
                              static_cast<long long>(r.rep.c_per_qam.den));
                csv += buf;
            }
        }
    }
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        fs::create_directories(fs::path(out_path).parent_path().empty()
                                   ? fs::path(".")
                                   : fs::path(out_path).parent_path());
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << csv;
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_emit_scenarios(const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::vector<Scenario> all;
    for (int n_prb : {1, 4}) {
        for (int chan = 0; chan < 3; ++chan) {
            const ChannelKind kind = chan == 0 ? ChannelKind::Awgn : ChannelKind::Tdl;
            const double rms = chan == 2 ? 1000.0 : 300.0;
            for (bool async_mode : {false, true}) {
                auto grid = narrowband_scenarios(n_prb, kind, rms, async_mode, Modulation::QAM64);
                for (auto& s : grid) {
                    s.id += chan == 0 ? "_awgn" : (chan == 1 ? "_tdlc300" : "_tdlc1000");
                    s.id += async_mode ? "_async" : "_sync";
                    all.push_back(s);
                }
            }
        }
    }
    for (int chan = 0; chan < 3; ++chan) {
        const ChannelKind kind = chan == 0 ? ChannelKind::Awgn : ChannelKind::Tdl;
        const double rms = chan == 2 ? 1000.0 : 300.0;
        auto grid = wideband_scenarios(kind, rms, Modulation::QAM64);
        for (auto& s : grid) {
            s.id += chan == 0 ? "_awgn" : (chan == 1 ? "_tdlc300" : "_tdlc1000");
            all.push_back(s);
        }
    }
    for (const auto& s : all) {
        const fs::path p = fs::path(out_dir) / (s.id + ".json");
        std::ofstream out(p);
        out << scenario_to_json(s) << "\n";
    }
    std::cout << "wrote " << all.size() << " scenario files to " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fast-convolution filtered-OFDM link simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir = "out";
    int drops = -1;
    long long seed = -1;
    bool no_plots = false;
    auto* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--drops", drops, "override Monte-Carlo drops");
    run->add_option("--seed", seed, "override RNG seed");
    run->add_flag("--no-plots", no_plots, "skip SVG plot output");

    std::string grid_out;
    bool grid = false;
    auto* comp = app.add_subcommand("complexity", "multiplication-count model");
    comp->add_flag("--grid", grid, "emit the slot-length sweep for the standard configurations");
    comp->add_option("--out", grid_out, "CSV output path (default: stdout)");

    std::string scen_dir = "scenarios_generated";
    auto* scen = app.add_subcommand("scenarios", "emit the frozen experiment grid as JSON files");
    scen->add_option("--out", scen_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(scenario_path, out_dir, drops, seed, no_plots);
        if (comp->parsed()) {
            if (!grid) {
                std::cerr << "nothing to do: pass --grid\n";
                return 1;
            }
            return cmd_complexity_grid(grid_out);
        }
        if (scen->parsed()) return cmd_emit_scenarios(scen_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
