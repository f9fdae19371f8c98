/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/numerology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcwave {

namespace {
bool is_pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }
} // namespace

Numerology make_numerology(int scs_khz, int n_fft) {
    if (!is_pow2(n_fft) || n_fft < 16)
        throw std::invalid_argument("n_fft must be a power of two >= 16");
    if (scs_khz <= 0 || scs_khz % 15 != 0 || !is_pow2(scs_khz / 15))
        throw std::invalid_argument("scs_khz must be 15*2^k");
    Numerology num;
    num.scs_khz = scs_khz;
    num.n_fft = n_fft;
    num.symbols_per_half_subframe = 7;
    return num;
}

CpSchedule cp_schedule(const Numerology& num, int n_symbols) {
    if (n_symbols < 1) throw std::invalid_argument("n_symbols must be >= 1");
    // Reference lengths at N=1024: 80 for n mod 7 == 0, else 72.
    if ((80LL * num.n_fft) % 1024 != 0 || (72LL * num.n_fft) % 1024 != 0)
        throw std::invalid_argument("n_fft does not scale the CP pattern to integers");
    const int long_cp = static_cast<int>(80LL * num.n_fft / 1024);
    const int short_cp = static_cast<int>(72LL * num.n_fft / 1024);
    CpSchedule sched;
    sched.per_symbol_high_rate.reserve(n_symbols);
    for (int n = 0; n < n_symbols; ++n)
        sched.per_symbol_high_rate.push_back(n % num.symbols_per_half_subframe == 0 ? long_cp
                                                                                    : short_cp);
    return sched;
}

FcParams derive_fc_params(int N, int L, double overlap) {
    if (L < 2 || N < L || N % L != 0)
        throw std::invalid_argument("L must divide N");
    const double lo = overlap * L;
    const int L_O = static_cast<int>(std::lround(lo));
    if (std::abs(lo - L_O) > 1e-9 || L_O <= 0 || L_O >= L)
        throw std::invalid_argument("overlap*L must be a positive integer < L");
    const double no = overlap * N;
    const int N_O = static_cast<int>(std::lround(no));
    if (std::abs(no - N_O) > 1e-9)
        throw std::invalid_argument("overlap*N must be an integer");

    FcParams p;
    p.L = L;
    p.N = N;
    p.overlap = overlap;
    p.I = N / L;
    p.L_O = L_O;
    p.L_S = L - L_O;
    p.L_L = (L_O + 1) / 2;
    p.L_T = L_O / 2;
    p.N_O = N_O;
    p.N_S = N - N_O;
    p.N_L = (N_O + 1) / 2;
    p.N_T = N_O / 2;
    return p;
}

double first_block_overlap(const FcParams& params, int l_cp) {
    if (l_cp < 0 || l_cp > params.L_L)
        throw std::invalid_argument("CP does not fit in the leading overlap (L_CP > L_L)");
    return 0.5 - static_cast<double>(l_cp) / params.L;
}

} // namespace fcwave
