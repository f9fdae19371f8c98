/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/numerology.hpp"

#include <doctest.h>

using namespace fcwave;

TEST_CASE("cp schedule follows the half-subframe pattern") {
    const Numerology num = make_numerology(15, 1024);
    const CpSchedule s7 = cp_schedule(num, 7);
    REQUIRE(s7.per_symbol_high_rate.size() == 7);
    CHECK(s7.per_symbol_high_rate[0] == 80);
    for (int n = 1; n < 7; ++n) CHECK(s7.per_symbol_high_rate[static_cast<std::size_t>(n)] == 72);

    const CpSchedule s14 = cp_schedule(num, 14);
    CHECK(s14.per_symbol_high_rate[0] == 80);
    CHECK(s14.per_symbol_high_rate[7] == 80);
    for (int n = 0; n < 14; ++n)
        if (n != 0 && n != 7) CHECK(s14.per_symbol_high_rate[static_cast<std::size_t>(n)] == 72);
}

TEST_CASE("cp schedule scales linearly with the transform size") {
    const CpSchedule s = cp_schedule(make_numerology(15, 512), 7);
    CHECK(s.per_symbol_high_rate[0] == 40);
    CHECK(s.per_symbol_high_rate[1] == 36);
}

TEST_CASE("cp schedule rejects transform sizes with fractional pattern") {
    CHECK_THROWS(cp_schedule(make_numerology(15, 16), 7));   // 80*16/1024 = 1.25
    CHECK_THROWS(cp_schedule(make_numerology(15, 64), 7));   // 72*64/1024 = 4.5
    CHECK_NOTHROW(cp_schedule(make_numerology(15, 128), 7));
}

TEST_CASE("half subframe spans exactly 0.5 ms") {
    const Numerology num = make_numerology(15, 1024);
    const CpSchedule s = cp_schedule(num, 7);
    const int total = s.total() + 7 * num.n_fft;
    CHECK(total == 7680);
    CHECK(total == static_cast<int>(num.fs_hz() / 2000.0));
}

TEST_CASE("fc params split the overlap into leading and tailing parts") {
    const FcParams p = derive_fc_params(1024, 128, 0.5);
    CHECK(p.L_O == 64);
    CHECK(p.L_S == 64);
    CHECK(p.L_L == 32);
    CHECK(p.L_T == 32);
    CHECK(p.I == 8);
    CHECK(p.N_O == 512);
    CHECK(p.N_S == 512);

    const FcParams p16 = derive_fc_params(1024, 16, 0.5);
    CHECK(p16.L_O == 8);
    CHECK(p16.L_L == 4);
    CHECK(p16.I == 64);

    const FcParams q = derive_fc_params(1024, 128, 0.25);
    CHECK(q.L_O == 32);
    CHECK(q.L_S == 96);
    CHECK(q.I == 8);
}

TEST_CASE("fc params rejects invalid geometry") {
    CHECK_THROWS(derive_fc_params(1024, 96, 0.5));    // L does not divide N
    CHECK_THROWS(derive_fc_params(1024, 16, 0.3));    // 0.3*16 not an integer
    CHECK_THROWS(derive_fc_params(64, 128, 0.5));     // L > N
}

TEST_CASE("overlap parts always tile the block") {
    for (int L : {8, 16, 64, 128, 1024}) {
        for (double lam : {0.25, 0.5}) {
            if (static_cast<double>(static_cast<int>(lam * L)) != lam * L) continue;
            const FcParams p = derive_fc_params(1024, L, lam);
            CHECK(p.L_L + p.L_S + p.L_T == p.L);
            CHECK(p.N_L + p.N_S + p.N_T == p.N);
        }
    }
}

TEST_CASE("first block overlap shrinks by the CP share") {
    const FcParams p128 = derive_fc_params(1024, 128, 0.5);
    CHECK(first_block_overlap(p128, 9) == doctest::Approx(0.4296875).epsilon(1e-12));
    CHECK(first_block_overlap(p128, 10) == doctest::Approx(0.421875).epsilon(1e-12));
    const FcParams p16 = derive_fc_params(64, 16, 0.5);
    CHECK(first_block_overlap(p16, 1) == doctest::Approx(0.4375).epsilon(1e-12));
    CHECK_THROWS(first_block_overlap(p16, p16.L_L + 1));
}
