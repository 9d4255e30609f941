#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim::schemes {

struct Fingerprint {
    std::vector<std::uint8_t> bits;  // 0 or 1 per full window transition
    double window_seconds = 30.0;
    std::string device_id;
};

struct ZipThresholds {
    double t_abs = 8.0;   // absolute mean-difference threshold
    double t_rel = 0.01;  // relative-difference threshold
};

/// Differential illuminance fingerprint: split the raw series into consecutive
/// windows; for window means m_{k-1}, m_k emit bit 1 iff both
/// |m_k - m_{k-1}| > t_abs and |m_k - m_{k-1}| / max(m_{k-1}, eps) > t_rel.
/// A partial trailing window yields no bit, so bit count = floor(T/w) - 1.
inline Fingerprint zip_fingerprint(const TimeSeries& series, const ZipThresholds& th,
                                   double window_seconds = 30.0) {
    if (th.t_abs <= 0.0 || th.t_rel <= 0.0)
        throw std::invalid_argument("zip_fingerprint: thresholds must be positive");
    const auto win = static_cast<std::size_t>(std::llround(window_seconds * series.rate));
    if (win == 0) throw std::invalid_argument("zip_fingerprint: window too small for rate");
    const std::size_t windows = series.size() / win;
    if (windows < 2) throw std::invalid_argument("zip_fingerprint: series shorter than 2 windows");

    std::vector<double> means(windows, 0.0);
    for (std::size_t w = 0; w < windows; ++w) {
        double s = 0.0;
        for (std::size_t i = 0; i < win; ++i) s += series.at(w * win + i, 0);
        means[w] = s / static_cast<double>(win);
    }

    constexpr double eps = 1e-6;
    Fingerprint fp;
    fp.window_seconds = window_seconds;
    fp.bits.reserve(windows - 1);
    for (std::size_t w = 1; w < windows; ++w) {
        const double diff = std::abs(means[w] - means[w - 1]);
        const double rel = diff / std::max(means[w - 1], eps);
        fp.bits.push_back(diff > th.t_abs && rel > th.t_rel ? 1 : 0);
    }
    return fp;
}

/// Percentage of agreeing bits; inputs are truncated to the shorter length.
inline double fingerprint_similarity(const Fingerprint& f1, const Fingerprint& f2) {
    const std::size_t n = std::min(f1.bits.size(), f2.bits.size());
    if (n == 0) throw std::invalid_argument("fingerprint_similarity: zero-length fingerprint");
    std::size_t match = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (f1.bits[i] == f2.bits[i]) ++match;
    return 100.0 * static_cast<double>(match) / static_cast<double>(n);
}

struct BalancedKeyStats {
    std::size_t balanced = 0;
    std::size_t windows = 0;
    double percent = 0.0;
};

/// Slides a key_bits window with the given step over the fingerprint and
/// counts windows whose ones ratio lies within 40:60 (for 20 bits: 8..12).
inline BalancedKeyStats balanced_keys(const Fingerprint& f, int key_bits = 20, int step = 4) {
    if (key_bits <= 0 || step <= 0) throw std::invalid_argument("balanced_keys: bad parameters");
    BalancedKeyStats stats;
    if (f.bits.size() < static_cast<std::size_t>(key_bits)) return stats;  // zero windows

    const int lo = static_cast<int>(std::ceil(0.4 * key_bits));
    const int hi = static_cast<int>(std::floor(0.6 * key_bits));
    for (std::size_t start = 0; start + static_cast<std::size_t>(key_bits) <= f.bits.size();
         start += static_cast<std::size_t>(step)) {
        int ones = 0;
        for (int i = 0; i < key_bits; ++i) ones += f.bits[start + static_cast<std::size_t>(i)];
        ++stats.windows;
        if (ones >= lo && ones <= hi) ++stats.balanced;
    }
    if (stats.windows > 0)
        stats.percent = 100.0 * static_cast<double>(stats.balanced) /
                        static_cast<double>(stats.windows);
    return stats;
}

/// Most-common-value min-entropy of a bit sequence, per bit:
/// -log2(max(freq(0), freq(1))), in [0, 1].
inline double min_entropy_mcv(const std::vector<std::uint8_t>& bits) {
    if (bits.empty()) throw std::invalid_argument("min_entropy_mcv: empty input");
    std::size_t ones = 0;
    for (auto b : bits) ones += b ? 1 : 0;
    const double p1 = static_cast<double>(ones) / static_cast<double>(bits.size());
    const double pmax = std::max(p1, 1.0 - p1);
    return -std::log2(pmax);
}

} // namespace zipsim::schemes
