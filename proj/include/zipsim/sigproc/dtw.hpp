#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim::sigproc {

namespace detail {

inline double local_cost(const TimeSeries& a, std::size_t i, const TimeSeries& b,
                         std::size_t j) {
    double c = 0.0;
    for (int ch = 0; ch < a.channels; ++ch) c += std::abs(a.at(i, ch) - b.at(j, ch));
    return c;
}

} // namespace detail

/// Classic dynamic-time-warping distance with absolute-difference local cost
/// and a full window. Smaller = more similar. O(n*m) time, O(min) memory.
inline double dtw_distance(const TimeSeries& a, const TimeSeries& b) {
    if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("dtw: empty series");
    if (a.channels != b.channels) throw std::invalid_argument("dtw: channel mismatch");
    const std::size_t n = a.size(), m = b.size();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> prev(m, inf), cur(m, inf);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double c = detail::local_cost(a, i, b, j);
            double best = 0.0;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = inf;
                if (i > 0) best = std::min(best, prev[j]);
                if (j > 0) best = std::min(best, cur[j - 1]);
                if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
            }
            cur[j] = c + best;
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

/// Min-max normalization of a set of raw DTW distances onto [0, 1]
/// (applied across all pairwise distances of one experiment).
inline std::vector<double> minmax_normalize(const std::vector<double>& raw) {
    if (raw.empty()) return {};
    const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(raw.size(), 0.0);
    if (hi > lo) {
        for (std::size_t i = 0; i < raw.size(); ++i) out[i] = (raw[i] - lo) / (hi - lo);
    }
    return out;
}

} // namespace zipsim::sigproc
