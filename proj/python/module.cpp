/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fcwave/fc_core.hpp"
#include "fcwave/fc_sync.hpp"
#include "fcwave/metrics.hpp"
#include "fcwave/numerology.hpp"
#include "fcwave/ofdm.hpp"
#include "fcwave/scenario.hpp"

namespace py = pybind11;
using namespace fcwave;

namespace {

SubbandConfig cfg_from(int L, int c, int n_active, int n_tb, int n_pass) {
    SubbandConfig cfg;
    cfg.L = L;
    cfg.l_ofdm = L;
    cfg.c = c;
    cfg.n_active = n_active;
    cfg.n_tb = n_tb;
    cfg.window = design_window(L, n_pass, n_tb);
    return cfg;
}

} // namespace

PYBIND11_MODULE(_fcwave, m) {
    m.doc() = "fast-convolution filtered-OFDM waveform engine";

    py::class_<FcParams>(m, "FcParams")
        .def_readonly("L", &FcParams::L)
        .def_readonly("N", &FcParams::N)
        .def_readonly("I", &FcParams::I)
        .def_readonly("L_O", &FcParams::L_O)
        .def_readonly("L_S", &FcParams::L_S)
        .def_readonly("L_L", &FcParams::L_L)
        .def_readonly("L_T", &FcParams::L_T)
        .def_readonly("N_O", &FcParams::N_O)
        .def_readonly("N_S", &FcParams::N_S)
        .def_readonly("N_L", &FcParams::N_L)
        .def_readonly("N_T", &FcParams::N_T);

    m.def("cp_schedule", [](int scs_khz, int n_fft, int n_symbols) {
        return cp_schedule(make_numerology(scs_khz, n_fft), n_symbols).per_symbol_high_rate;
    });
    m.def("derive_fc_params", &derive_fc_params, py::arg("N"), py::arg("L"), py::arg("overlap"));
    m.def("first_block_overlap", &first_block_overlap);
    m.def("cp_truncate", [](int n_cp, int I) {
        const CpSplit s = cp_truncate(n_cp, I);
        return py::make_tuple(s.l_cp, s.extrap);
    });
    m.def("design_window", &design_window, py::arg("L"), py::arg("n_pass"), py::arg("n_tb"));
    m.def("mu", &mu);
    m.def("theory_ber", [](const std::string& mod, double esn0_db) {
        Modulation mm = mod == "qpsk" ? Modulation::QPSK
                                      : (mod == "16qam" ? Modulation::QAM16 : Modulation::QAM64);
        return theory_ber(mm, esn0_db);
    });

    m.def("ofdm_modulate", [](const cvec& col) {
        QamGrid g;
        g.l_ofdm = static_cast<int>(col.size());
        g.symbols = {col};
        return ofdm_modulate(g, 0);
    });
    m.def("ofdm_demodulate", &ofdm_demodulate);
    m.def("evm_db", &evm_db);
    m.def("psd", &psd, py::arg("samples"), py::arg("seg_len"), py::arg("overlap_frac") = 0.5);

    m.def(
        "tx_discontinuous",
        [](const std::vector<cvec>& grid_cols, int L, int N, int c, int n_active, int n_tb,
           int n_pass, int scs_khz) {
            QamGrid g;
            g.l_ofdm = L;
            g.symbols = grid_cols;
            g.active_map.clear();
            const Numerology num = make_numerology(scs_khz, N);
            const CpSchedule cps = cp_schedule(num, static_cast<int>(grid_cols.size()));
            Waveform w = tx_discontinuous({g}, {cfg_from(L, c, n_active, n_tb, n_pass)}, cps, N,
                                          0.5, num.fs_hz());
            return py::make_tuple(w.samples, w.useful0);
        },
        py::arg("grid_cols"), py::arg("L"), py::arg("N"), py::arg("c"), py::arg("n_active"),
        py::arg("n_tb"), py::arg("n_pass"), py::arg("scs_khz") = 15);

    m.def(
        "rx_discontinuous",
        [](const cvec& samples, std::int64_t useful0, int n_symbols, int L, int N, int c,
           int n_active, int n_tb, int n_pass, bool simplified, int scs_khz) {
            Waveform w;
            w.samples = samples;
            w.useful0 = useful0;
            const Numerology num = make_numerology(scs_khz, N);
            w.fs_hz = num.fs_hz();
            const CpSchedule cps = cp_schedule(num, n_symbols);
            return rx_discontinuous(w, cfg_from(L, c, n_active, n_tb, n_pass), cps, N, 0.5,
                                    simplified);
        },
        py::arg("samples"), py::arg("useful0"), py::arg("n_symbols"), py::arg("L"), py::arg("N"),
        py::arg("c"), py::arg("n_active"), py::arg("n_tb"), py::arg("n_pass"),
        py::arg("simplified") = false, py::arg("scs_khz") = 15);

    m.def("run_scenario_json", [](const std::string& json_text) {
        return results_to_csv(run_scenario(parse_scenario(json_text)));
    });
    m.def("scenario_roundtrip", [](const std::string& json_text) {
        return scenario_to_json(parse_scenario(json_text));
    });
}
