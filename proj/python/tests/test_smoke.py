# Copyright 2026 The fcwave authors
# SPDX-License-Identifier: Apache-2.0
import cmath
import json
import math

import _fcwave as fc


def test_cp_schedule():
    s = fc.cp_schedule(15, 1024, 7)
    assert s == [80, 72, 72, 72, 72, 72, 72]
    s14 = fc.cp_schedule(15, 1024, 14)
    assert s14[0] == 80 and s14[7] == 80


def test_fc_params():
    p = fc.derive_fc_params(1024, 128, 0.5)
    assert (p.L_O, p.L_S, p.L_L, p.L_T, p.I) == (64, 64, 32, 32, 8)
    assert p.N_L + p.N_S + p.N_T == 1024


def test_cp_truncate_and_overlap():
    assert fc.cp_truncate(80, 64) == (1, 16)
    assert fc.cp_truncate(72, 8) == (9, 0)
    p = fc.derive_fc_params(1024, 128, 0.5)
    assert abs(fc.first_block_overlap(p, 9) - 0.4296875) < 1e-12


def test_window_and_mu():
    w = fc.design_window(16, 12, 2)
    assert sum(1 for v in w if v == 1.0) == 12
    assert abs(min(w) - 0.25) < 1e-12
    assert fc.mu(128) == 516
    assert fc.mu(16) == 20


def test_ofdm_roundtrip():
    col = [0j] * 16
    col[1] = 1 + 1j
    col[15] = -1 + 0.5j
    x = fc.ofdm_modulate(col)
    back = fc.ofdm_demodulate(x)
    assert max(abs(a - b) for a, b in zip(back, col)) < 1e-12


def test_discontinuous_chain_roundtrip():
    L, N, c = 16, 1024, 512
    bins = [1, 2, 3, 4, 12, 13, 14, 15]
    cols = []
    for n in range(3):
        col = [0j] * L
        for i, b in enumerate(bins):
            col[b] = cmath.exp(1j * (0.7 * n + i))
        cols.append(col)
    samples, useful0 = fc.tx_discontinuous(cols, L, N, c, 8, 2, 12)
    rec = fc.rx_discontinuous(samples, useful0, 3, L, N, c, 8, 2, 12)
    # raised-cosine loopback: in-band error stays ~30 dB down
    num = den = 0.0
    for n in range(3):
        for b in bins:
            num += abs(rec[n][b] - cols[n][b]) ** 2
            den += abs(cols[n][b]) ** 2
    assert 10 * math.log10(den / num) > 25.0
    # fused path matches the direct one
    rec2 = fc.rx_discontinuous(samples, useful0, 3, L, N, c, 8, 2, 12, True)
    worst = max(
        abs(a - b) for ra, rb in zip(rec, rec2) for a, b in zip(ra, rb)
    )
    assert worst < 1e-10


def test_theory_ber_monotone():
    prev = 1.0
    for snr in range(0, 30, 3):
        b = fc.theory_ber("64qam", snr)
        assert b <= prev + 1e-12
        prev = b


def test_scenario_roundtrip_and_run():
    scenario = {
        "id": "pysmoke",
        "modulation": "qpsk",
        "slot_symbols": 2,
        "snr_db": [30.0],
        "drops": 2,
        "seed": 3,
        "filtering": {"tx": "discontinuous", "rx": "discontinuous", "lambda": 0.5},
        "subbands": [
            {"prb": 1, "active": 8, "center_bin": 512, "n_tb": 2, "l_tx": 16, "l_rx": 16}
        ],
    }
    text = json.dumps(scenario)
    j1 = fc.scenario_roundtrip(text)
    assert json.loads(j1)["id"] == "pysmoke"
    csv1 = fc.run_scenario_json(text)
    csv2 = fc.run_scenario_json(text)
    assert csv1 == csv2
    header, row = csv1.strip().split("\n")
    assert header.startswith("scenario,config_id,snr_db,ber")
    assert row.split(",")[0] == "pysmoke"
