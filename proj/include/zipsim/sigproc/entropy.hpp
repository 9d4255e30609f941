#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim::sigproc {

struct EntropyResult {
    double value = 0.0;  // normalized to [0, 1]
    int bins = 0;
};

/// Histogram entropy of raw samples, normalized by log2(b):
/// values are quantized into b equal-width bins spanning [min, max] of the
/// series; H = -sum P(x_i) log2 P(x_i) / log2 b. A constant series has H = 0.
inline EntropyResult entropy(const std::vector<double>& samples, int bins) {
    if (bins < 2) throw std::invalid_argument("entropy: need at least 2 bins");
    if (samples.empty()) throw std::invalid_argument("entropy: empty series");

    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it, hi = *hi_it;
    EntropyResult res;
    res.bins = bins;
    if (hi <= lo) return res;  // constant series

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double v : samples) {
        auto idx = static_cast<long long>((v - lo) * scale);
        if (idx >= bins) idx = bins - 1;  // v == max lands in the last bin
        if (idx < 0) idx = 0;
        ++counts[static_cast<std::size_t>(idx)];
    }

    const double n = static_cast<double>(samples.size());
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    res.value = h / std::log2(static_cast<double>(bins));
    return res;
}

/// All channels of a series pooled into one sample population.
inline EntropyResult entropy(const TimeSeries& ts, int bins) {
    return entropy(ts.values, bins);
}

} // namespace zipsim::sigproc
