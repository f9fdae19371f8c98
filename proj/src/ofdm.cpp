/*
 * Copyright 2026 The fcwave authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "fcwave/ofdm.hpp"

#include "fcwave/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace fcwave {

namespace {

// Gray-coded PAM level for k bits: bits index the level via the binary-
// reflected code, so adjacent levels differ in one bit.
int gray_pam_level(unsigned bits, int k) {
    // binary-reflected Gray decode
    unsigned g = bits;
    unsigned b = 0;
    for (unsigned mask = g; mask; mask >>= 1) b ^= mask;
    (void)k;
    return static_cast<int>(b);
}

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

double pam_scale(int levels) {
    // unit average power per complex symbol: E[(2i+1-M)^2] per axis = (M^2-1)/3
    const double per_axis = (static_cast<double>(levels) * levels - 1.0) / 3.0;
    return 1.0 / std::sqrt(2.0 * per_axis);
}

int axis_levels(Modulation m) {
    switch (m) {
        case Modulation::QPSK: return 2;
        case Modulation::QAM16: return 4;
        case Modulation::QAM64: return 8;
    }
    return 2;
}

} // namespace

int bits_per_symbol(Modulation m) {
    switch (m) {
        case Modulation::QPSK: return 2;
        case Modulation::QAM16: return 4;
        case Modulation::QAM64: return 6;
    }
    return 2;
}

cd qam_map(Modulation m, unsigned symbol_bits) {
    const int levels = axis_levels(m);
    const int k = bits_per_symbol(m) / 2;
    const unsigned mask = (1u << k) - 1u;
    const unsigned bi = symbol_bits & mask;          // in-phase bits
    const unsigned bq = (symbol_bits >> k) & mask;   // quadrature bits
    const int li = gray_pam_level(bi, k);
    const int lq = gray_pam_level(bq, k);
    const double s = pam_scale(levels);
    return {s * (2 * li + 1 - levels), s * (2 * lq + 1 - levels)};
}

unsigned qam_demap(Modulation m, cd y) {
    const int levels = axis_levels(m);
    const int k = bits_per_symbol(m) / 2;
    const double s = pam_scale(levels);
    auto slice = [&](double v) {
        int idx = static_cast<int>(std::lround((v / s - 1.0 + levels) / 2.0));
        if (idx < 0) idx = 0;
        if (idx >= levels) idx = levels - 1;
        return gray_encode(static_cast<unsigned>(idx));
    };
    return slice(y.real()) | (slice(y.imag()) << k);
}

std::vector<int> centered_active_map(int l_ofdm, int n_active, bool skip_dc) {
    if (n_active <= 0 || n_active > l_ofdm - (skip_dc ? 1 : 0))
        throw std::invalid_argument("active subcarriers do not fit the transform");
    std::vector<int> bins;
    bins.reserve(n_active);
    if (skip_dc) {
        const int lo = n_active / 2;
        const int hi = n_active - lo;
        for (int ls = -lo; ls <= -1; ++ls) bins.push_back((ls + l_ofdm) % l_ofdm);
        for (int ls = 1; ls <= hi; ++ls) bins.push_back(ls);
    } else {
        const int lo = n_active / 2;
        for (int ls = -lo; ls < n_active - lo; ++ls) bins.push_back((ls + l_ofdm) % l_ofdm);
    }
    return bins;
}

cvec ofdm_modulate(const QamGrid& grid, int n) {
    if (n < 0 || n >= grid.n_symbols()) throw std::out_of_range("symbol index");
    cvec x = grid.symbols[static_cast<std::size_t>(n)];
    if (static_cast<int>(x.size()) != grid.l_ofdm)
        throw std::invalid_argument("grid column size mismatch");
    fft::inverse(x);
    const double s = std::sqrt(static_cast<double>(grid.l_ofdm));
    for (auto& v : x) v *= s;
    return x;
}

cvec cp_insert(const cvec& sym, int l_cp) {
    const int l = static_cast<int>(sym.size());
    if (l_cp < 0 || l_cp >= l) throw std::invalid_argument("l_cp out of range");
    cvec out;
    out.reserve(static_cast<std::size_t>(l + l_cp));
    out.insert(out.end(), sym.end() - l_cp, sym.end());
    out.insert(out.end(), sym.begin(), sym.end());
    return out;
}

cvec cp_remove(const cvec& sig, int l_cp, int l_ofdm) {
    if (l_cp < 0 || l_ofdm <= 0 ||
        sig.size() < static_cast<std::size_t>(l_cp) + static_cast<std::size_t>(l_ofdm))
        throw std::invalid_argument("signal shorter than l_cp + l_ofdm");
    return cvec(sig.begin() + l_cp, sig.begin() + l_cp + l_ofdm);
}

cvec ofdm_demodulate(const cvec& sym) {
    cvec x = sym;
    fft::forward(x);
    const double s = 1.0 / std::sqrt(static_cast<double>(sym.size()));
    for (auto& v : x) v *= s;
    return x;
}

CpOfdmSignal build_cp_ofdm(const QamGrid& grid, const std::vector<int>& cp_lengths) {
    if (static_cast<int>(cp_lengths.size()) != grid.n_symbols())
        throw std::invalid_argument("one CP length per symbol required");
    CpOfdmSignal sig;
    sig.l_ofdm = grid.l_ofdm;
    sig.cp_lengths = cp_lengths;
    for (int n = 0; n < grid.n_symbols(); ++n) {
        cvec sym = cp_insert(ofdm_modulate(grid, n), cp_lengths[static_cast<std::size_t>(n)]);
        sig.samples.insert(sig.samples.end(), sym.begin(), sym.end());
    }
    return sig;
}

} // namespace fcwave
