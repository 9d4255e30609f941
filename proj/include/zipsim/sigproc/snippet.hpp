#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim::sigproc {

/// Consecutive non-overlapping snippets of `length_s` seconds; a trailing
/// remainder shorter than one snippet is dropped.
inline std::vector<AudioClip> snippet_split(const AudioClip& clip, double length_s) {
    if (!(length_s > 0.0)) throw std::invalid_argument("snippet_split: bad length");
    if (length_s > clip.duration() + 1e-9)
        throw std::invalid_argument("snippet_split: length exceeds clip duration");
    const auto step = static_cast<std::size_t>(std::llround(length_s * clip.sample_rate));
    std::vector<AudioClip> out;
    for (std::size_t start = 0; start + step <= clip.samples.size(); start += step) {
        AudioClip s;
        s.sample_rate = clip.sample_rate;
        s.samples.assign(clip.samples.begin() + static_cast<std::ptrdiff_t>(start),
                         clip.samples.begin() + static_cast<std::ptrdiff_t>(start + step));
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<TimeSeries> snippet_split(const TimeSeries& ts, double length_s) {
    if (!(length_s > 0.0)) throw std::invalid_argument("snippet_split: bad length");
    if (length_s > ts.duration() + 1e-9)
        throw std::invalid_argument("snippet_split: length exceeds series duration");
    const auto step = static_cast<std::size_t>(std::llround(length_s * ts.rate));
    std::vector<TimeSeries> out;
    for (std::size_t start = 0; start + step <= ts.size(); start += step) {
        TimeSeries s;
        s.rate = ts.rate;
        s.t0 = ts.timestamp(start);
        s.channels = ts.channels;
        s.kind = ts.kind;
        const std::size_t c = static_cast<std::size_t>(ts.channels);
        s.values.assign(ts.values.begin() + static_cast<std::ptrdiff_t>(start * c),
                        ts.values.begin() + static_cast<std::ptrdiff_t>((start + step) * c));
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace zipsim::sigproc
