#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/dsp/xcorr.hpp"

namespace zipsim::sigproc {

struct SyncResult {
    AudioClip a;
    AudioClip b;
    double lag_seconds = 0.0;   // by how much b trailed a
    bool low_confidence = false;  // peak below 3x the mean |r|
};

/// Aligns two recordings of the same scene: b is shifted by the lag that
/// maximizes the full cross-correlation with a and the overlapping region
/// of both clips is returned.
inline SyncResult sync_audio(const AudioClip& a, const AudioClip& b,
                             const Params& params = Params()) {
    if (a.sample_rate != b.sample_rate)
        throw std::invalid_argument("sync_audio: sample rates differ");
    if (a.samples.empty() || b.samples.empty())
        throw std::invalid_argument("sync_audio: empty clip");

    const std::vector<double> xa(a.samples.begin(), a.samples.end());
    const std::vector<double> xb(b.samples.begin(), b.samples.end());
    const auto xc = dsp::full_xcorr(xa, xb);

    // Positive lag: b's content starts later; drop b's head. Negative: drop a's.
    const long long lag = xc.lag;
    const std::size_t a_start = lag < 0 ? static_cast<std::size_t>(-lag) : 0;
    const std::size_t b_start = lag > 0 ? static_cast<std::size_t>(lag) : 0;
    if (a_start >= a.samples.size() || b_start >= b.samples.size())
        throw std::invalid_argument("sync_audio: no overlap after alignment");
    const std::size_t overlap =
        std::min(a.samples.size() - a_start, b.samples.size() - b_start);

    const double min_overlap_s = params.get_d("sig.sync.min_overlap_s");
    if (static_cast<double>(overlap) / a.sample_rate < min_overlap_s)
        throw std::invalid_argument("sync_audio: overlap shorter than minimum");

    SyncResult res;
    res.lag_seconds = static_cast<double>(lag) / a.sample_rate;
    res.low_confidence = xc.mean_abs > 0.0 && xc.peak < 3.0 * xc.mean_abs;
    res.a.sample_rate = a.sample_rate;
    res.b.sample_rate = b.sample_rate;
    res.a.samples.assign(a.samples.begin() + static_cast<std::ptrdiff_t>(a_start),
                         a.samples.begin() + static_cast<std::ptrdiff_t>(a_start + overlap));
    res.b.samples.assign(b.samples.begin() + static_cast<std::ptrdiff_t>(b_start),
                         b.samples.begin() + static_cast<std::ptrdiff_t>(b_start + overlap));
    return res;
}

} // namespace zipsim::sigproc
