#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zipsim/dsp/fft.hpp"

namespace zipsim::dsp {

struct XcorrPeak {
    double value = 0.0;     // normalized correlation at the peak
    long long lag = 0;      // samples; positive lag means b is delayed vs a
    double mean_abs = 0.0;  // mean |r| over the searched lags (peak quality)
};

/// Maximum normalized cross-correlation of a and b over lags in [-maxlag, maxlag].
/// r[tau] = sum_t a[t] b[t+tau] / sqrt(E_a E_b), with b zero outside its range.
///
/// Runs block-wise: cross-spectra of short FFT blocks are accumulated so only
/// one small inverse transform is needed regardless of signal length.
inline XcorrPeak max_xcorr(const std::vector<double>& a, const std::vector<double>& b,
                           std::size_t maxlag) {
    if (a.empty() || b.empty()) throw std::invalid_argument("max_xcorr: empty input");

    double ea = 0.0, eb = 0.0;
    for (double v : a) ea += v * v;
    for (double v : b) eb += v * v;
    if (ea <= 1e-30 || eb <= 1e-30) return {};  // silent input: define r = 0

    const std::size_t k = maxlag;
    const std::size_t fft_n = std::max<std::size_t>(next_pow2(4 * k + 8), 16384);
    const std::size_t block = fft_n - 2 * k;  // a-samples consumed per block

    RealFft fft(fft_n);
    const std::size_t bins = fft.bins();
    std::vector<double> buf(fft_n);
    std::vector<std::complex<double>> sa(bins), sb(bins), acc(bins, {0.0, 0.0});

    const long long n = static_cast<long long>(a.size());
    const long long nb = static_cast<long long>(b.size());
    for (long long base = 0; base < n; base += static_cast<long long>(block)) {
        const long long len = std::min<long long>(static_cast<long long>(block), n - base);
        std::fill(buf.begin(), buf.end(), 0.0);
        for (long long t = 0; t < len; ++t) buf[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(base + t)];
        fft.forward(buf.data(), sa.data());

        std::fill(buf.begin(), buf.end(), 0.0);
        for (long long u = 0; u < static_cast<long long>(len + 2 * static_cast<long long>(k)); ++u) {
            const long long src = base - static_cast<long long>(k) + u;
            if (src >= 0 && src < nb) buf[static_cast<std::size_t>(u)] = b[static_cast<std::size_t>(src)];
        }
        fft.forward(buf.data(), sb.data());

        for (std::size_t i = 0; i < bins; ++i) acc[i] += std::conj(sa[i]) * sb[i];
    }

    std::vector<double> corr(fft_n);
    fft.inverse(acc.data(), corr.data());

    // corr[j] holds r[j - k] for j in [0, 2k].
    const double norm = 1.0 / std::sqrt(ea * eb);
    XcorrPeak peak;
    peak.value = -2.0;
    double sum_abs = 0.0;
    for (std::size_t j = 0; j <= 2 * k; ++j) {
        const double r = corr[j] * norm;
        sum_abs += std::abs(r);
        if (r > peak.value) {
            peak.value = r;
            peak.lag = static_cast<long long>(j) - static_cast<long long>(k);
        }
    }
    peak.mean_abs = sum_abs / static_cast<double>(2 * k + 1);
    return peak;
}

struct FullXcorrResult {
    long long lag = 0;      // best alignment; positive means b starts later than a
    double peak = 0.0;      // normalized peak value
    double mean_abs = 0.0;  // mean |r| over all lags
};

/// Cross-correlation over every possible lag (used for synchronization).
inline FullXcorrResult full_xcorr(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("full_xcorr: empty input");
    const std::size_t n = next_pow2(a.size() + b.size());
    RealFft fft(n);
    std::vector<double> buf(n, 0.0);
    std::vector<std::complex<double>> sa(fft.bins()), sb(fft.bins());

    std::copy(a.begin(), a.end(), buf.begin());
    fft.forward(buf.data(), sa.data());
    std::fill(buf.begin(), buf.end(), 0.0);
    std::copy(b.begin(), b.end(), buf.begin());
    fft.forward(buf.data(), sb.data());

    for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = std::conj(sa[i]) * sb[i];
    std::vector<double> corr(n);
    fft.inverse(sa.data(), corr.data());

    double ea = 0.0, eb = 0.0;
    for (double v : a) ea += v * v;
    for (double v : b) eb += v * v;
    const double norm = (ea > 1e-30 && eb > 1e-30) ? 1.0 / std::sqrt(ea * eb) : 0.0;

    // Indexing: corr[tau] = r[tau] for tau >= 0, corr[n - tau] = r[-tau].
    FullXcorrResult res;
    double best = -1e300;
    double sum_abs = 0.0;
    const long long hi = static_cast<long long>(b.size()) - 1;
    const long long lo = -(static_cast<long long>(a.size()) - 1);
    for (long long tau = lo; tau <= hi; ++tau) {
        const std::size_t idx =
            tau >= 0 ? static_cast<std::size_t>(tau) : n - static_cast<std::size_t>(-tau);
        const double r = corr[idx] * norm;
        sum_abs += std::abs(r);
        if (r > best) {
            best = r;
            res.lag = tau;
        }
    }
    res.peak = best;
    res.mean_abs = sum_abs / static_cast<double>(hi - lo + 1);
    return res;
}

} // namespace zipsim::dsp
